// pslab: batch driver for the principal-series workbench.
//
//   pslab dims   [--config FILE] [key=value ...]
//   pslab blocks [--config FILE] [key=value ...]
//   pslab verify {intertwiner|basis|rank1|socle|action} [--config FILE] [key=value ...]
//   pslab ext    {omega|gamma|xi|club|probe|split} [--config FILE] [key=value ...]
//
// Exit codes: 0 pass, 1 verification failure, 2 config error, 3 budget error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pslab/commands.hpp"
#include "pslab/errors.hpp"

namespace fs = std::filesystem;
using namespace pslab;

namespace {

struct Invocation {
    std::string config_file;
    std::string which;
    std::vector<std::string> overrides;
};

void add_common(CLI::App* sub, Invocation& inv)
{
    sub->add_option("--config", inv.config_file, "flat key=value config file");
    sub->add_option("overrides", inv.overrides, "key=value overrides");
}

fs::path output_path(const RunConfig& cfg, const std::string& stem)
{
    const char* dir = std::getenv("PSLAB_OUTPUT_DIR");
    if (!cfg.out.empty()) {
        fs::path p(cfg.out);
        if (p.is_relative() && dir && *dir) p = fs::path(dir) / p;
        return p;
    }
    if (dir && *dir) return fs::path(dir) / (stem + ".json");
    return {};
}

void emit(const CommandResult& res, const fs::path& path)
{
    const std::string text = res.report.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream(path) << text;
    fs::path csv = path;
    csv.replace_extension(".csv");
    std::ofstream(csv) << csv_text(res);
    std::cerr << "wrote " << path.string() << " and " << csv.string() << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact-arithmetic workbench for principal-series modules of SL_{r+1} over finite field towers"};
    app.require_subcommand(1);
    Invocation inv;

    auto* dims = app.add_subcommand("dims", "module dimensions and composition-sum identity");
    add_common(dims, inv);
    auto* blk = app.add_subcommand("blocks", "partition of (theta, J) by central character");
    add_common(blk, inv);
    auto* verify = app.add_subcommand("verify", "structural checks on the principal series");
    verify->add_option("which", inv.which, "intertwiner, basis, rank1, socle or action")
        ->required()
        ->check(CLI::IsMember({"intertwiner", "basis", "rank1", "socle", "action"}));
    add_common(verify, inv);
    auto* ext = app.add_subcommand("ext", "extension censuses and probes");
    ext->add_option("which", inv.which, "omega, gamma, xi, club, probe or split")
        ->required()
        ->check(CLI::IsMember({"omega", "gamma", "xi", "club", "probe", "split"}));
    add_common(ext, inv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg;
        if (!inv.config_file.empty()) load_config_file(cfg, inv.config_file);
        for (const auto& kv : inv.overrides) apply_override(cfg, kv);

        CommandResult res;
        std::string stem;
        if (dims->parsed()) {
            res = cmd_dims(cfg);
            stem = "dims";
        } else if (blk->parsed()) {
            res = cmd_blocks(cfg);
            stem = "blocks";
        } else if (verify->parsed()) {
            res = cmd_verify(cfg, inv.which);
            stem = "verify_" + inv.which;
        } else {
            res = cmd_ext(cfg, inv.which);
            stem = "ext_" + inv.which;
        }
        emit(res, output_path(cfg, stem));
        return res.pass ? 0 : 1;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
