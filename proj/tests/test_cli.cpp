#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "pslab/commands.hpp"
#include "pslab/errors.hpp"

using namespace pslab;
namespace fs = std::filesystem;

namespace {

RunConfig with(std::initializer_list<const char*> kv)
{
    RunConfig cfg;
    for (const char* s : kv) apply_override(cfg, s);
    return cfg;
}

int run_cli(const std::string& args)
{
    const std::string cmd = std::string(PSLAB_BIN) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch_dir()
{
    const fs::path dir = fs::temp_directory_path() / "pslab_cli_test";
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("config parsing")
{
    const fs::path file = scratch_dir() / "run.cfg";
    std::ofstream(file) << "# comment\n\ngroup = A2\np=2\nN=2\ntheta=1, 2\nJ=3\nseed=42\n";
    RunConfig cfg;
    load_config_file(cfg, file.string());
    CHECK(cfg.group == "A2");
    CHECK(cfg.p == 2);
    CHECK(cfg.N == 2);
    CHECK(cfg.theta == std::vector<std::int64_t>{1, 2});
    CHECK(cfg.J == 3u);
    CHECK(cfg.seed == 42u);
    apply_override(cfg, "theta=-1,0");
    CHECK(cfg.theta == std::vector<std::int64_t>{-1, 0});
    apply_override(cfg, "ell=auto");
    CHECK(!cfg.ell);
    CHECK_THROWS_AS(apply_override(cfg, "bogus=1"), PreconditionError);
    CHECK_THROWS_AS(apply_override(cfg, "p=x"), PreconditionError);
    CHECK_THROWS_AS(apply_override(cfg, "group=B2"), PreconditionError);
    CHECK_THROWS_AS(apply_override(cfg, "threads=0"), PreconditionError);
    CHECK_THROWS_AS(apply_override(cfg, "grid=some"), PreconditionError);
    CHECK_THROWS_AS(apply_override(cfg, "novalue"), PreconditionError);
    CHECK_THROWS_AS(load_config_file(cfg, (scratch_dir() / "missing.cfg").string()), PreconditionError);
}

TEST_CASE("config echo leaves out threads")
{
    const auto a = echo(with({"threads=1"}));
    const auto b = echo(with({"threads=8"}));
    CHECK(a == b);
    CHECK(!a.contains("threads"));
}

TEST_CASE("dims")
{
    auto r = cmd_dims(with({"group=A1", "p=3"}));
    CHECK(r.pass);
    CHECK(r.report["points"][0]["dim_M"] == 4);
    CHECK(r.report["points"][0]["dim_E"]["0"] == 1);
    CHECK(r.report["points"][0]["dim_E"]["1"] == 3);
    r = cmd_dims(with({"group=A2", "p=2"}));
    CHECK(r.report["points"][0]["dim_M"] == 21);
    CHECK(r.report["points"][0]["dim_E"]["3"] == 8);
    CHECK_THROWS_AS(cmd_dims(with({"group=A1", "p=3", "theta=1", "J=1"})), PreconditionError);
    CHECK_THROWS_AS(cmd_dims(with({"k=2"})), PreconditionError);
}

TEST_CASE("blocks")
{
    CHECK(cmd_blocks(with({"group=A1", "p=3"})).report["block_count"] == 2);
    CHECK(cmd_blocks(with({"group=A2", "p=2"})).report["block_count"] == 1);
    CHECK(cmd_blocks(with({"group=A1", "p=2"})).report["block_count"] == 1);
}

TEST_CASE("verify")
{
    CHECK(cmd_verify(with({"grid=full"}), "intertwiner").pass);
    const auto cal = cmd_verify(with({"group=A2", "grid=full"}), "intertwiner").report["calibration"];
    CHECK(cal["winner"] == "theta(w^-1 t w)");
    CHECK(cmd_verify(with({"grid=full"}), "basis").pass);
    CHECK(cmd_verify(with({"group=A2", "p=2", "N=2"}), "rank1").pass);
    CHECK(cmd_verify(with({"group=A2", "grid=full"}), "socle").pass);
    CHECK(cmd_verify(with({"group=A2", "samples=50"}), "action").pass);
    CHECK_THROWS_AS(cmd_verify(with({}), "nothing"), PreconditionError);
}

TEST_CASE("ext reports")
{
    const auto om = cmd_ext(with({"N=2", "mu=2"}), "omega");
    CHECK(om.pass);
    CHECK(om.report["simple_omega_prime_one"] == true);
    CHECK(om.report["rows"][1]["omega_prime"] == 1);
    CHECK(cmd_ext(with({"N=2", "mu=2"}), "gamma").report["gamma_e_empty"] == true);
    CHECK(cmd_ext(with({"N=2", "mu=2"}), "club").pass);
    CHECK(cmd_ext(with({"N=2", "mu=2"}), "xi").pass);
    CHECK(cmd_ext(with({"p=2", "N=3", "mu=1"}), "probe").report.contains("composition"));
    const auto sp = cmd_ext(with({"lambda=1", "mu=0", "samples=20"}), "split");
    CHECK(sp.pass);
    CHECK(sp.report["points"][0]["successes"] == 20);
    CHECK(cmd_ext(with({"grid=full", "samples=5"}), "split").report["points"].size() == 4);
    CHECK_THROWS_AS(cmd_ext(with({"lambda=0", "mu=0"}), "split"), PreconditionError);
    CHECK_THROWS_AS(cmd_ext(with({"N=1"}), "omega"), PreconditionError);
    CHECK_THROWS_AS(cmd_ext(with({"group=A3", "N=2"}), "omega"), BudgetExceeded);
}

TEST_CASE("reports are identical across thread counts and reruns")
{
    for (const char* which : {"omega", "gamma", "club", "xi", "probe"}) {
        const std::string a = cmd_ext(with({"p=2", "N=3", "i=2", "mu=1", "threads=1"}), which).report.dump(2);
        const std::string b = cmd_ext(with({"p=2", "N=3", "i=2", "mu=1", "threads=8"}), which).report.dump(2);
        const std::string c = cmd_ext(with({"p=2", "N=3", "i=2", "mu=1", "threads=8"}), which).report.dump(2);
        CHECK(a == b);
        CHECK(b == c);
    }
}

TEST_CASE("vector serialization")
{
    RunConfig cfg = with({"group=A1", "p=3"});
    const Workbench wb = Workbench::build(cfg);
    const InducedModule M(wb.chars, wb.chars->trivial(), 1);
    Vec v = M.zero();
    v[0] = 1;
    v[M.dim() - 1] = 2;
    const auto j = vector_json(M, v);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["w"].empty());
    CHECK(j[0]["c"] == 1);
    CHECK(j[1]["w"] == std::vector<int>{1});
    CHECK(j[1]["u"].size() == 1);
    CHECK(j[1]["c"] == 2);
}

TEST_CASE("binary exit codes and output files")
{
    CHECK(run_cli("dims") == 0);
    CHECK(run_cli("dims theta=1 J=1") == 2);
    CHECK(run_cli("dims bogus=1") == 2);
    CHECK(run_cli("verify nothing") == 2);
    CHECK(run_cli("ext omega group=A3 N=2") == 3);
    CHECK(run_cli("") == 2);
    const fs::path dir = scratch_dir() / "out";
    fs::remove_all(dir);
    CHECK(run_cli("blocks out=" + (dir / "b.json").string()) == 0);
    CHECK(fs::exists(dir / "b.json"));
    CHECK(fs::exists(dir / "b.csv"));
    const fs::path cfg = scratch_dir() / "ext.cfg";
    std::ofstream(cfg) << "N=2\nmu=2\n";
    CHECK(run_cli("ext omega --config " + cfg.string() + " out=" + (dir / "o.json").string()) == 0);
    std::ifstream csv(dir / "o.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "w,length,omega,omega_prime,bound,bound_ok,factor_ok,lower_ok");
    CHECK(std::system(("PSLAB_OUTPUT_DIR=" + dir.string() + " " + PSLAB_BIN + " dims > /dev/null 2>&1").c_str()) == 0);
    CHECK(fs::exists(dir / "dims.json"));
}
