#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pslab/config.hpp"
#include "pslab/extension_lab.hpp"

namespace pslab {

struct CommandResult {
    nlohmann::json report;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    bool pass = true;
};

CommandResult cmd_dims(const RunConfig& cfg);
CommandResult cmd_blocks(const RunConfig& cfg);
/// which: intertwiner, basis, rank1, socle, action
CommandResult cmd_verify(const RunConfig& cfg, const std::string& which);
/// which: omega, gamma, xi, club, probe, split
CommandResult cmd_ext(const RunConfig& cfg, const std::string& which);

/// Canonical JSON of a module vector: nonzero entries in basis order as
/// {"w": word, "u": entry indices, "c": coefficient}. Entry index 0 is the
/// zero element and m + 1 is generator^m.
nlohmann::json vector_json(const InducedModule& M, const Vec& v);
nlohmann::json subspace_json(const InducedModule& M, const Subspace& s);
nlohmann::json subset_json(SubsetJ J);

std::string csv_text(const CommandResult& r);

} // namespace pslab
