#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pslab/commands.hpp"

using namespace pslab;

namespace {

RunConfig with(std::initializer_list<std::string> kv)
{
    RunConfig cfg;
    for (const auto& s : kv) apply_override(cfg, s);
    return cfg;
}

std::string exps(const Character& c)
{
    std::string s;
    for (std::size_t k = 0; k < c.e.size(); ++k) s += (k ? "," : "") + std::to_string(c.e[k]);
    return s;
}

/// Every mu that is nontrivial on each rank-one torus at level i + 1.
std::vector<RunConfig> generic_contexts(const std::string& group, std::uint32_t p, int N, int i)
{
    const RunConfig base = with({"group=" + group, "p=" + std::to_string(p), "N=" + std::to_string(N),
                                 "i=" + std::to_string(i)});
    const Workbench wb = Workbench::build(base);
    std::vector<RunConfig> out;
    for (const Character& mu : wb.chars->all()) {
        if (!wb.chars->i_theta(mu, i + 1).empty()) continue;
        RunConfig cfg = base;
        apply_override(cfg, "mu=" + exps(mu));
        out.push_back(cfg);
    }
    return out;
}

std::vector<RunConfig> gated_contexts()
{
    auto a = generic_contexts("A1", 3, 2, 1);
    const auto b = generic_contexts("A2", 2, 2, 1);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::string tag(const RunConfig& c)
{
    std::ostringstream s;
    s << c.group << " q=" << c.p << " N=" << c.N << " i=" << c.i << " mu=(";
    for (std::size_t k = 0; k < c.mu.size(); ++k) s << (k ? "," : "") << c.mu[k];
    s << ")";
    return s.str();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

/// limit is wall-clock seconds; 0 means unlimited.
void criterion(int n, const std::string& name, double limit, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs > limit) {
        o.pass = false;
        o.detail += " over the " + std::to_string(static_cast<int>(limit)) + "s limit";
    }
    failures += !o.pass;
    std::printf("%s  %2d  %-48s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", n, name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
}

} // namespace

int main()
{
    criterion(1, "module dimensions match Bruhat sums", 10, [] {
        Outcome o;
        int points = 0;
        for (const RunConfig& c : {with({"group=A1", "p=3", "grid=full"}), with({"group=A1", "p=3", "N=2", "k=1", "grid=full"}),
                                   with({"group=A1", "p=3", "N=2", "k=2", "grid=full"}), with({"group=A2", "p=2", "grid=full"}),
                                   with({"group=A2", "p=3", "grid=full"})}) {
            const auto r = cmd_dims(c);
            o.pass = o.pass && r.pass;
            points += static_cast<int>(r.report["points"].size());
        }
        o.detail = std::to_string(points) + " characters";
        return o;
    });

    criterion(2, "E_J basis and sum identity", 120, [] {
        const auto a = cmd_verify(with({"group=A1", "p=3", "grid=full"}), "basis");
        const auto b = cmd_verify(with({"group=A2", "p=2"}), "basis");
        Outcome o{a.pass && b.pass, std::to_string(a.report["points"].size() + b.report["points"].size()) + " (theta, J) points"};
        if (!a.pass) o.detail += " first failure " + a.report["first_failure"].dump();
        if (!b.pass) o.detail += " first failure " + b.report["first_failure"].dump();
        return o;
    });

    criterion(3, "intertwiner cases and twist calibration", 60, [] {
        Outcome o;
        std::string winners;
        std::string unique;
        std::vector<nlohmann::json> cals;
        for (const RunConfig& c : {with({"group=A1", "p=3", "grid=full"}), with({"group=A2", "p=2", "grid=full"}),
                                   with({"group=A2", "p=3", "grid=full"})}) {
            const auto r = cmd_verify(c, "intertwiner");
            o.pass = o.pass && r.pass;
            const auto& cal = r.report["calibration"];
            cals.push_back(cal);
            const std::string w = cal["ambiguous"].get<bool>() ? "ambiguous" : cal["winner"].get<std::string>();
            winners += (winners.empty() ? "" : " | ") + c.group + " q=" + std::to_string(c.p) + ": " + w;
            if (!cal["ambiguous"].get<bool>()) {
                if (unique.empty()) unique = w;
                o.pass = o.pass && w == unique;
            }
            if (!r.pass) o.detail += "first failure " + r.report["first_failure"].dump() + " ";
        }
        o.pass = o.pass && !unique.empty();
        const char* hits = unique == "theta(w t w^-1)" ? "conjugate_hits" : "inverse_conjugate_hits";
        for (const auto& cal : cals) o.pass = o.pass && cal[hits] == cal["case_i_total"];
        o.detail += winners;
        return o;
    });

    criterion(4, "rank-one relation at every level", 0, [] {
        Outcome o;
        for (const RunConfig& c : {with({"group=A1", "p=3", "N=2"}), with({"group=A2", "p=2", "N=2"}), with({"group=A1", "p=2", "N=3"})}) {
            const auto r = cmd_verify(c, "rank1");
            o.pass = o.pass && r.pass;
            if (!r.pass) o.detail += c.group + " first failure " + r.report["first_failure"].dump() + " ";
        }
        if (o.pass) o.detail = "A1 q=3 N=2, A2 q=2 N=2, A1 q=2 N=3";
        return o;
    });

    criterion(5, "Omega_w bound, factorization, simple |Omega'|=1", 300, [] {
        Outcome o;
        const auto ctxs = gated_contexts();
        for (const RunConfig& c : ctxs) {
            const auto r = cmd_ext(c, "omega");
            bool ok = true;
            for (const auto& row : r.report["rows"]) ok = ok && row["bound_ok"].get<bool>() && row["factor_ok"].get<bool>();
            ok = ok && r.report["simple_omega_prime_one"].get<bool>();
            if (!ok) o.detail += tag(c) + " ";
            o.pass = o.pass && ok;
        }
        o.detail = std::to_string(ctxs.size()) + " contexts" + (o.pass ? "" : ", failing: " + o.detail);
        return o;
    });

    criterion(6, "H partition, Omega misses U_i, Gamma_e empty", 0, [] {
        Outcome o;
        const auto ctxs = gated_contexts();
        for (const RunConfig& c : ctxs) {
            const auto om = cmd_ext(c, "omega");
            const auto g = cmd_ext(c, "gamma");
            const bool ok = om.report["H"]["partition"].get<bool>() && om.report["H"]["contains_self"].get<bool>() &&
                            om.report["omega_meets_U_i"].get<int>() == 0 && g.report["gamma_e_empty"].get<bool>();
            if (!ok) o.detail += tag(c) + " ";
            o.pass = o.pass && ok;
        }
        o.detail = std::to_string(ctxs.size()) + " contexts" + (o.pass ? "" : ", failing: " + o.detail);
        return o;
    });

    criterion(7, "club claim implies xi nonzero", 0, [] {
        Outcome o;
        auto ctxs = gated_contexts();
        ctxs.push_back(with({"group=A1", "p=2", "N=3", "i=2", "mu=1"}));
        std::uint64_t census = 0, club = 0;
        std::string witnesses;
        for (const RunConfig& c : ctxs) {
            const auto r = cmd_ext(c, "club");
            census += r.report["census_size"].get<std::uint64_t>();
            club += r.report["club_true"].get<std::uint64_t>();
            if (!r.pass) witnesses += tag(c) + " " + r.report["counterexamples"].dump() + " ";
            o.pass = o.pass && r.pass;
        }
        o.detail = std::to_string(census) + " u checked, club true for " + std::to_string(club);
        if (club == 0) o.detail += " (vacuous)";
        if (!o.pass) o.detail += ", witnesses: " + witnesses;
        return o;
    });

    criterion(8, "phi equivariance and deterministic probe", 0, [] {
        Outcome o;
        int checks = 0;
        for (const RunConfig& base : {with({"group=A1", "p=3", "N=2", "i=1", "mu=2"}), with({"group=A1", "p=2", "N=3", "i=1", "mu=1"}),
                                      with({"group=A1", "p=2", "N=3", "i=2", "mu=1"})}) {
            RunConfig one = base, eight = base;
            one.threads = 1;
            eight.threads = 8;
            const auto ref = cmd_ext(one, "probe");
            o.pass = o.pass && ref.pass && !ref.report["probe"].is_null();
            if (!ref.report["probe"].is_null()) checks += ref.report["probe"]["equivariance_checks"].get<int>();
            const std::string dump = ref.report.dump();
            for (int rerun = 0; rerun < 3; ++rerun) o.pass = o.pass && cmd_ext(one, "probe").report.dump() == dump;
            o.pass = o.pass && cmd_ext(eight, "probe").report.dump() == dump;
            if (!ref.pass) o.detail += tag(base) + " ";
        }
        o.detail = std::to_string(checks) + " equivariance checks, 3 reruns + threads 1 vs 8" +
                   (o.pass ? "" : ", failing: " + o.detail);
        return o;
    });

    criterion(9, "central splitting on the full grid", 0, [] {
        const auto r = cmd_ext(with({"group=A1", "p=3", "grid=full", "samples=100"}), "split");
        int trials = 0, ok = 0;
        for (const auto& pt : r.report["points"]) {
            trials += pt["trials"].get<int>();
            ok += pt["successes"].get<int>();
        }
        return Outcome{r.pass && r.report["points"].size() == 4,
                       std::to_string(r.report["points"].size()) + " points, " + std::to_string(ok) + "/" +
                           std::to_string(trials) + " twisted gluings split"};
    });

    criterion(10, "socle of E_J", 0, [] {
        const auto a = cmd_verify(with({"group=A1", "p=3", "grid=full"}), "socle");
        const auto b = cmd_verify(with({"group=A2", "p=2"}), "socle");
        Outcome o{a.pass && b.pass, std::to_string(a.report["points"].size() + b.report["points"].size()) + " (theta, J) points"};
        if (!a.pass) o.detail += " first failure " + a.report["first_failure"].dump();
        if (!b.pass) o.detail += " first failure " + b.report["first_failure"].dump();
        return o;
    });

    // Steinberg-type contexts (mu trivial on some T_j) fall outside the gate.
    for (const RunConfig& c : {with({"group=A1", "p=3", "N=2", "i=1", "mu=0"}), with({"group=A2", "p=2", "N=2", "i=1", "mu=0,0"})}) {
        const auto r = cmd_ext(c, "omega");
        std::string simple;
        for (const auto& row : r.report["rows"])
            if (row["length"] == 1) simple += " " + row["w"].get<std::string>() + ":" + std::to_string(row["omega_prime"].get<int>());
        std::printf("INFO      %s |Omega'_s|%s, |Omega cap U_i| = %d\n", tag(c).c_str(), simple.c_str(),
                    r.report["omega_meets_U_i"].get<int>());
    }

    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
