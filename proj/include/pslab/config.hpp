#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pslab/characters.hpp"

namespace pslab {

/// Flat key=value run configuration shared by every subcommand.
struct RunConfig {
    std::string group = "A1";
    std::uint32_t p = 3;
    std::uint32_t a = 1;
    int N = 1;
    std::optional<std::uint32_t> ell;
    std::vector<std::int64_t> theta;
    std::vector<std::int64_t> lambda;
    std::vector<std::int64_t> mu;
    std::optional<std::uint32_t> J;
    std::optional<std::uint32_t> K;
    int k = 1;
    int i = 1;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string out;
    std::string grid = "single";
    int samples = 100;

    int rank() const;
};

/// Throws PreconditionError on unknown keys or malformed values.
void set_key(RunConfig& cfg, const std::string& key, const std::string& value);
/// "key=value" lines; blank lines and lines starting with '#' are skipped.
void load_config_file(RunConfig& cfg, const std::string& path);
void apply_override(RunConfig& cfg, const std::string& assignment);

/// Config echo for reports; threads is left out so output does not depend on it.
nlohmann::json echo(const RunConfig& cfg);

/// Field tower, root system, group and characters for one configuration.
struct Workbench {
    std::shared_ptr<const FieldTower> field;
    std::shared_ptr<const RootSystem> roots;
    std::shared_ptr<const Chevalley> group;
    std::shared_ptr<const CharacterTable> chars;

    static Workbench build(const RunConfig& cfg);
    /// Empty list gives the trivial character.
    Character character(const std::vector<std::int64_t>& exps) const;
};

} // namespace pslab
