#include "pslab/commands.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "pslab/errors.hpp"

namespace pslab {

using nlohmann::json;

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

json char_json(const Character& c) { return json(c.e); }

std::string char_csv(const Character& c)
{
    std::string out;
    for (std::size_t k = 0; k < c.e.size(); ++k) out += (k ? ";" : "") + std::to_string(c.e[k]);
    return out;
}

std::uint64_t ipow(std::uint64_t b, int e)
{
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void require_level(const Workbench& wb, int k)
{
    require(k >= 1 && k <= wb.field->max_level(), "config: level must lie in 1..N");
}

std::vector<Character> theta_grid(const Workbench& wb, const RunConfig& cfg)
{
    if (cfg.grid == "full") return wb.chars->all();
    return {wb.character(cfg.theta)};
}

SubsetJ subset_from(std::optional<std::uint32_t> mask, int r)
{
    if (!mask) return {};
    require(*mask < (1u << r), "config: subset mask has bits outside 1..r");
    return SubsetJ{*mask};
}

json base_report(const RunConfig& cfg, const Workbench& wb, const std::string& command)
{
    json j;
    j["command"] = command;
    j["config"] = echo(cfg);
    j["ell"] = wb.chars->coeffs().ell();
    j["q"] = wb.field->q();
    return j;
}

json unipotent_json(const Chevalley& G, const Mat& u, int k)
{
    json out = json::array();
    for (const Root& a : G.roots().positive_roots()) out.push_back(G.field().level_index(u(a.i, a.j), k));
    return out;
}

} // namespace

json subset_json(SubsetJ J) { return json(J.indices()); }

json vector_json(const InducedModule& M, const Vec& v)
{
    const auto& R = M.group().roots();
    const auto& field = M.group().field();
    json out = json::array();
    for (int idx = 0; idx < M.dim(); ++idx) {
        if (v[idx] == 0) continue;
        const BasisKey& key = M.keys()[idx];
        json entries = json::array();
        for (const Root& a : R.phi_minus(R.inverse(key.w))) entries.push_back(field.level_index(key.u(a.i, a.j), M.level()));
        out.push_back({{"w", R.word(key.w)}, {"u", entries}, {"c", v[idx]}});
    }
    return out;
}

json subspace_json(const InducedModule& M, const Subspace& s)
{
    json rows = json::array();
    for (const auto& row : s.rows()) rows.push_back(vector_json(M, row));
    return {{"dim", s.dim()}, {"rows", rows}};
}

std::string csv_text(const CommandResult& r)
{
    std::ostringstream out;
    for (std::size_t k = 0; k < r.csv_header.size(); ++k) out << (k ? "," : "") << r.csv_header[k];
    out << "\n";
    for (const auto& row : r.csv_rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << row[k];
        out << "\n";
    }
    return out.str();
}

CommandResult cmd_dims(const RunConfig& cfg)
{
    const Workbench wb = Workbench::build(cfg);
    require_level(wb, cfg.k);
    const auto& R = *wb.roots;
    const std::uint64_t qt = wb.field->level_size(cfg.k);
    std::uint64_t bruhat = 0;
    for (WeylElt w : R.elements()) bruhat += ipow(qt, R.length(w));

    CommandResult res;
    res.report = base_report(cfg, wb, "dims");
    res.csv_header = {"theta", "I_theta", "dim_M", "bruhat_sum", "sum_E", "pass"};
    json points = json::array();
    for (const Character& theta : theta_grid(wb, cfg)) {
        PrincipalSeries P(wb.chars, theta, cfg.k);
        if (cfg.J) require(subset_from(cfg.J, R.rank()).subset_of(P.i_theta()), "config: J must lie inside I(theta)");
        json E = json::object();
        std::uint64_t sum = 0;
        for (SubsetJ J : P.subsets()) {
            E[std::to_string(J.mask)] = P.e(J).dim();
            sum += P.e(J).dim();
        }
        const std::uint64_t dim = P.module().dim();
        const bool ok = dim == bruhat && sum == dim;
        res.pass = res.pass && ok;
        points.push_back({{"theta", char_json(theta)},
                          {"I_theta", subset_json(P.i_theta())},
                          {"dim_M", dim},
                          {"bruhat_sum", bruhat},
                          {"dim_E", E},
                          {"sum_E", sum},
                          {"pass", ok}});
        res.csv_rows.push_back({char_csv(theta), str(P.i_theta().mask), str(dim), str(bruhat), str(sum), ok ? "1" : "0"});
    }
    res.report["points"] = points;
    res.report["pass"] = res.pass;
    return res;
}

CommandResult cmd_blocks(const RunConfig& cfg)
{
    const Workbench wb = Workbench::build(cfg);
    std::vector<BlockParam> params;
    for (const Character& theta : wb.chars->all())
        for (SubsetJ J : subsets_of(wb.chars->i_theta(theta))) params.push_back({theta, J});
    const auto parts = blocks(*wb.chars, params);

    CommandResult res;
    res.report = base_report(cfg, wb, "blocks");
    res.csv_header = {"block", "central_key", "size"};
    json out = json::array();
    int b = 0;
    for (const auto& [key, members] : parts) {
        json list = json::array();
        for (const auto& m : members) list.push_back({{"theta", char_json(m.theta)}, {"J", subset_json(m.J)}});
        out.push_back({{"central_key", key}, {"size", members.size()}, {"params", list}});
        std::string k;
        for (std::size_t t = 0; t < key.size(); ++t) k += (t ? ";" : "") + std::to_string(key[t]);
        res.csv_rows.push_back({std::to_string(b++), k, str(members.size())});
    }
    res.report["blocks"] = out;
    res.report["block_count"] = parts.size();
    res.report["param_count"] = params.size();
    res.report["pass"] = true;
    return res;
}

namespace {

CommandResult verify_basis(const RunConfig& cfg, const Workbench& wb)
{
    CommandResult res;
    res.report = base_report(cfg, wb, "verify basis");
    res.csv_header = {"theta", "J", "vectors", "rank", "dim_E", "count_formula", "pass"};
    json points = json::array();
    json first_failure = nullptr;
    for (const Character& theta : theta_grid(wb, cfg)) {
        PrincipalSeries P(wb.chars, theta, cfg.k);
        std::uint64_t sum = 0;
        for (SubsetJ J : P.subsets()) {
            const BasisReport r = check_basis(P, J);
            sum += r.dim_E;
            json row = {{"theta", char_json(theta)}, {"J", subset_json(J)},         {"z_set", r.z_set},
                        {"vectors", r.vectors},      {"rank", r.rank},              {"dim_E", r.dim_E},
                        {"count_formula", r.count_formula}, {"independent", r.independent},
                        {"spanning", r.spanning},    {"pass", r.pass()}};
            if (!r.pass() && first_failure.is_null()) first_failure = row;
            res.pass = res.pass && r.pass();
            points.push_back(row);
            res.csv_rows.push_back({char_csv(theta), str(J.mask), str(r.vectors), str(r.rank), str(r.dim_E),
                                    str(r.count_formula), r.pass() ? "1" : "0"});
        }
        if (sum != static_cast<std::uint64_t>(P.module().dim())) {
            res.pass = false;
            if (first_failure.is_null()) first_failure = {{"theta", char_json(theta)}, {"sum_E", sum}, {"dim_M", P.module().dim()}};
        }
    }
    res.report["points"] = points;
    res.report["first_failure"] = first_failure;
    res.report["pass"] = res.pass;
    return res;
}

CommandResult verify_intertwiner(const RunConfig& cfg, const Workbench& wb)
{
    CommandResult res;
    res.report = base_report(cfg, wb, "verify intertwiner");
    res.csv_header = {"theta", "case_i", "case_i_conjugate", "case_i_inverse_conjugate", "case_ii", "case_ii_equal"};
    std::vector<IntertwinerReport> reports;
    json points = json::array();
    const auto& R = *wb.roots;
    for (const Character& theta : theta_grid(wb, cfg)) {
        PrincipalSeries P(wb.chars, theta, cfg.k);
        reports.push_back(pslab::verify_intertwiner(P));
        const IntertwinerReport& r = reports.back();
        points.push_back({{"theta", char_json(theta)},
                          {"case_i", r.case_i},
                          {"case_i_conjugate", r.case_i_conjugate},
                          {"case_i_inverse_conjugate", r.case_i_inverse_conjugate},
                          {"case_ii", r.case_ii},
                          {"case_ii_equal", r.case_ii_equal}});
        res.csv_rows.push_back({char_csv(theta), str(r.case_i), str(r.case_i_conjugate),
                                str(r.case_i_inverse_conjugate), str(r.case_ii), str(r.case_ii_equal)});
    }
    const Calibration cal = calibrate(reports);
    bool case_ii_ok = true;
    json first_failure = nullptr;
    for (std::size_t t = 0; t < reports.size(); ++t) {
        for (const IntertwinerCase& c : reports[t].cases) {
            bool ok = c.equal;
            if (c.case_i && cal.winner)
                ok = *cal.winner == TwistConvention::Conjugate ? c.match_conjugate : c.match_inverse_conjugate;
            if (!c.case_i) case_ii_ok = case_ii_ok && c.equal;
            if (!ok && first_failure.is_null())
                first_failure = {{"theta", points[t]["theta"]}, {"J", subset_json(c.J)}, {"i", c.i},
                                 {"w", R.name(c.w)},            {"x", c.x},               {"case_i", c.case_i}};
        }
    }
    res.pass = case_ii_ok && (cal.winner.has_value() || cal.ambiguous) && first_failure.is_null();
    res.report["points"] = points;
    res.report["calibration"] = {{"winner", cal.winner ? convention_name(*cal.winner) : std::string("none")},
                                 {"ambiguous", cal.ambiguous},
                                 {"case_i_total", cal.case_i_total},
                                 {"conjugate_hits", cal.conjugate_hits},
                                 {"inverse_conjugate_hits", cal.inverse_conjugate_hits}};
    res.report["first_failure"] = first_failure;
    res.report["pass"] = res.pass;
    return res;
}

CommandResult verify_rank1(const RunConfig& cfg, const Workbench& wb)
{
    const Chevalley& G = *wb.group;
    const auto& R = *wb.roots;
    CommandResult res;
    res.report = base_report(cfg, wb, "verify rank1");
    res.csv_header = {"level", "i", "checked", "failures"};
    json rows = json::array();
    json first_failure = nullptr;
    for (int k = 1; k <= wb.field->max_level(); ++k) {
        for (int i = 1; i <= R.rank(); ++i) {
            const Root a = R.simple_root(i);
            const Mat s = G.sdot(i);
            const Mat s_inv = G.inverse(s);
            std::uint64_t checked = 0, failures = 0;
            for (Elt x : wb.field->level_members(k)) {
                if (x == 0) continue;
                const Rank1Constants c = G.rank1_constants(i, x);
                const Mat lhs = G.mul(G.mul(s, G.eps(a, x)), s_inv);
                const Mat rhs = G.mul(G.mul(G.eps(a, c.f), s), G.mul(G.coroot(i, c.h), G.eps(a, c.g)));
                ++checked;
                if (lhs != rhs || c.f == 0 || c.g == 0) {
                    ++failures;
                    if (first_failure.is_null()) first_failure = {{"level", k}, {"i", i}, {"x", x}};
                }
            }
            res.pass = res.pass && failures == 0;
            rows.push_back({{"level", k}, {"i", i}, {"checked", checked}, {"failures", failures}});
            res.csv_rows.push_back({std::to_string(k), std::to_string(i), str(checked), str(failures)});
        }
    }
    res.report["rows"] = rows;
    res.report["first_failure"] = first_failure;
    res.report["pass"] = res.pass;
    return res;
}

CommandResult verify_socle(const RunConfig& cfg, const Workbench& wb)
{
    CommandResult res;
    res.report = base_report(cfg, wb, "verify socle");
    res.csv_header = {"theta", "J", "Jp", "nabla_dim", "spin_D", "dim_E", "pass"};
    json points = json::array();
    json first_failure = nullptr;
    for (const Character& theta : theta_grid(wb, cfg)) {
        PrincipalSeries P(wb.chars, theta, cfg.k);
        for (SubsetJ J : P.subsets()) {
            const SocleReport r = check_socle(P, J);
            json row = {{"theta", char_json(theta)}, {"J", subset_json(J)}, {"Jp", subset_json(r.Jp)},
                        {"nabla_dim", r.nabla_dim},  {"spin_D", r.spin_D},  {"dim_E", r.dim_E},
                        {"pass", r.pass()}};
            if (!r.pass() && first_failure.is_null()) first_failure = row;
            res.pass = res.pass && r.pass();
            points.push_back(row);
            res.csv_rows.push_back({char_csv(theta), str(J.mask), str(r.Jp.mask), str(r.nabla_dim), str(r.spin_D),
                                    str(r.dim_E), r.pass() ? "1" : "0"});
        }
    }
    res.report["points"] = points;
    res.report["first_failure"] = first_failure;
    res.report["pass"] = res.pass;
    return res;
}

CommandResult verify_action(const RunConfig& cfg, const Workbench& wb)
{
    const Chevalley& G = *wb.group;
    const Character theta = wb.character(cfg.theta);
    InducedModule M(wb.chars, theta, cfg.k);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> pick(0, M.dim() - 1);

    std::uint64_t assoc_fail = 0, identity_fail = 0, borel_fail = 0;
    json first_failure = nullptr;
    for (int s = 0; s < cfg.samples; ++s) {
        const Mat g = G.random_element(cfg.k, rng);
        const Mat h = G.random_element(cfg.k, rng);
        const Vec v = M.unit(pick(rng));
        if (M.act(G.mul(g, h), v) != M.act(g, M.act(h, v))) {
            ++assoc_fail;
            if (first_failure.is_null()) first_failure = {{"sample", s}, {"kind", "associativity"}};
        }
        if (M.act(G.identity(), v) != v) ++identity_fail;
        const Torus t = G.random_torus(cfg.k, rng);
        const Mat b = G.mul(G.diag(t), G.random_unipotent(wb.roots->positive_roots(), cfg.k, rng));
        if (M.act(b, M.base()) != scale(M.F(), wb.chars->eval_B(theta, b), M.base())) {
            ++borel_fail;
            if (first_failure.is_null()) first_failure = {{"sample", s}, {"kind", "borel"}};
        }
    }
    CommandResult res;
    res.pass = assoc_fail == 0 && identity_fail == 0 && borel_fail == 0;
    res.report = base_report(cfg, wb, "verify action");
    res.report["dim_M"] = M.dim();
    res.report["samples"] = cfg.samples;
    res.report["associativity_failures"] = assoc_fail;
    res.report["identity_failures"] = identity_fail;
    res.report["borel_failures"] = borel_fail;
    res.report["first_failure"] = first_failure;
    res.report["pass"] = res.pass;
    res.csv_header = {"samples", "associativity_failures", "identity_failures", "borel_failures"};
    res.csv_rows.push_back({std::to_string(cfg.samples), str(assoc_fail), str(identity_fail), str(borel_fail)});
    return res;
}

ExtParams ext_params(const RunConfig& cfg, const Workbench& wb)
{
    const int r = wb.roots->rank();
    return {wb.character(cfg.lambda), subset_from(cfg.J, r), wb.character(cfg.mu), subset_from(cfg.K, r), cfg.i};
}

json context_json(const ExtContext& ctx)
{
    const auto& s = ctx.params();
    return {{"lambda", char_json(s.lambda)},
            {"J", subset_json(s.J)},
            {"mu", char_json(s.mu)},
            {"K", subset_json(s.K)},
            {"Jp", subset_json(ctx.Jp())},
            {"i", s.i},
            {"qt", ctx.qt()},
            {"U_next", ctx.U_next().size()},
            {"dim_E_lambda", ctx.E_lambda(s.i).dim()},
            {"dim_E_mu_next", ctx.E_mu(s.i + 1).dim()},
            {"dim_target", ctx.target().dim()}};
}

CommandResult ext_omega(const RunConfig& cfg, const Workbench& wb, const ExtContext& ctx)
{
    const OmegaCensus om = omega_census(ctx, cfg.threads);
    const HReport h = h_partition(ctx, cfg.threads);
    CommandResult res;
    res.report = base_report(cfg, wb, "ext omega");
    res.report["context"] = context_json(ctx);
    res.csv_header = {"w", "length", "omega", "omega_prime", "bound", "bound_ok", "factor_ok", "lower_ok"};
    json rows = json::array();
    bool bounds = true;
    bool simple_one = true;
    for (const OmegaRow& row : om.rows) {
        bounds = bounds && row.bound_ok && row.factor_ok;
        if (row.length == 1) simple_one = simple_one && row.omega_prime == 1;
        rows.push_back({{"w", row.name},
                        {"length", row.length},
                        {"omega", row.omega},
                        {"omega_prime", row.omega_prime},
                        {"bound", row.bound},
                        {"bound_ok", row.bound_ok},
                        {"factor_ok", row.factor_ok},
                        {"lower_ok", row.lower_ok}});
        std::ostringstream b;
        b << row.bound;
        res.csv_rows.push_back({row.name, std::to_string(row.length), str(row.omega), str(row.omega_prime), b.str(),
                                row.bound_ok ? "1" : "0", row.factor_ok ? "1" : "0", row.lower_ok ? "1" : "0"});
    }
    res.report["rows"] = rows;
    res.report["omega_size"] = om.omega_size;
    res.report["omega_meets_U_i"] = om.omega_meets_U_i;
    res.report["P_value_times3"] = om.P_value_times3;
    res.report["simple_omega_prime_one"] = simple_one;
    res.report["H"] = {{"classes", h.classes},
                       {"class_lower_bound", h.class_lower_bound},
                       {"partition", h.partition},
                       {"contains_self", h.contains_self}};
    res.pass = bounds && h.partition && h.contains_self;
    res.report["pass"] = res.pass;
    return res;
}

CommandResult ext_gamma(const RunConfig& cfg, const Workbench& wb, const ExtContext& ctx)
{
    const OmegaCensus om = omega_census(ctx, cfg.threads);
    const GammaReport g = gamma_set(ctx, om, cfg.threads);
    const auto& R = *wb.roots;
    CommandResult res;
    res.report = base_report(cfg, wb, "ext gamma");
    res.report["context"] = context_json(ctx);
    json cells = json::object();
    res.csv_header = {"w", "gamma_w"};
    for (WeylElt w : R.elements()) {
        cells[R.name(w)] = g.cell_counts[w.id];
        res.csv_rows.push_back({R.name(w), str(g.cell_counts[w.id])});
    }
    res.report["cell_counts"] = cells;
    res.report["omega_size"] = om.omega_size;
    res.report["gamma_size"] = g.gamma_size;
    res.report["omega_minus_gamma"] = g.omega_minus_gamma;
    res.report["gamma_e_empty"] = g.gamma_e_empty;
    res.pass = g.gamma_e_empty;
    res.report["pass"] = res.pass;
    return res;
}

CommandResult ext_club(const RunConfig& cfg, const Workbench& wb, const ExtContext& ctx)
{
    const ClubCensus cl = club_census(ctx, cfg.threads);
    CommandResult res;
    res.report = base_report(cfg, wb, "ext club");
    res.report["context"] = context_json(ctx);
    res.report["census_size"] = cl.rows.size();
    res.report["club_true"] = cl.club_true;
    res.report["xi_nonzero"] = cl.xi_nonzero;
    res.report["eigen_ok"] = cl.eigen_ok;
    json witnesses = json::array();
    for (int u : cl.counterexamples)
        witnesses.push_back({{"index", u}, {"u", unipotent_json(*wb.group, ctx.U_next()[u], cfg.i + 1)}});
    res.report["counterexamples"] = witnesses;
    res.csv_header = {"u", "club", "xi_nonzero", "eigen_ok"};
    for (std::size_t u = 0; u < cl.rows.size(); ++u)
        res.csv_rows.push_back({str(u), str(cl.rows[u].club), str(cl.rows[u].xi_nonzero), str(cl.rows[u].eigen_ok)});
    res.pass = cl.counterexamples.empty() && cl.eigen_ok;
    res.report["pass"] = res.pass;
    return res;
}

CommandResult ext_xi(const RunConfig& cfg, const Workbench& wb, const ExtContext& ctx)
{
    const int u = choose_u(ctx, cfg.threads);
    CommandResult res;
    res.report = base_report(cfg, wb, "ext xi");
    res.report["context"] = context_json(ctx);
    res.report["chosen_u"] = u;
    res.csv_header = {"chosen_u", "xi_nonzero", "eigen_ok"};
    if (u < 0) {
        res.report["xi"] = nullptr;
        res.csv_rows.push_back({"-1", "0", ""});
        res.report["pass"] = true;
        return res;
    }
    const XiResult x = xi(ctx, ctx.U_next()[u]);
    res.report["u"] = unipotent_json(*wb.group, ctx.U_next()[u], cfg.i + 1);
    res.report["xi_nonzero"] = x.nonzero;
    res.report["eigen_ok"] = x.eigen_ok;
    res.report["xi_M"] = vector_json(ctx.mu_at(cfg.i + 1).module(), x.xi_M);
    res.report["xi_E"] = x.xi;
    res.csv_rows.push_back({std::to_string(u), x.nonzero ? "1" : "0", x.eigen_ok ? "1" : "0"});
    res.pass = x.eigen_ok;
    res.report["pass"] = res.pass;
    return res;
}

CommandResult ext_probe(const RunConfig& cfg, const Workbench& wb, const ExtContext& ctx)
{
    const int u = choose_u(ctx, cfg.threads);
    CommandResult res;
    res.report = base_report(cfg, wb, "ext probe");
    res.report["context"] = context_json(ctx);
    res.report["chosen_u"] = u;
    res.csv_header = {"chosen_u", "xi_nonzero", "phi_rank", "phi_kernel", "equivariance_failures", "non_split_signal"};
    if (u < 0) {
        res.report["probe"] = nullptr;
        res.csv_rows.push_back({"-1", "0", "0", "0", "0", "0"});
        res.report["pass"] = true;
        return res;
    }
    const XiResult x = xi(ctx, ctx.U_next()[u]);
    const PhiMap phi = phi_map(ctx, x);
    const ProbeReport p = twisted_probe(ctx, u);
    res.report["probe"] = {{"xi_nonzero", p.xi_nonzero},
                           {"phi_well_defined", p.phi_well_defined},
                           {"phi_rank", p.phi_rank},
                           {"phi_kernel", p.phi_kernel},
                           {"equivariance_checks", phi.checks},
                           {"equivariance_failures", p.equivariance_failures},
                           {"inclusions_injective", p.inclusions_injective},
                           {"dim_Mi", p.dim_Mi},
                           {"dim_Mnext", p.dim_Mnext},
                           {"dim_fixed", p.dim_fixed},
                           {"dim_image_fixed", p.dim_image_fixed},
                           {"dim_image_fixed_lambda", p.dim_image_fixed_lambda},
                           {"non_split_signal", p.non_split_signal},
                           {"phi", phi.phi.a}};
    res.csv_rows.push_back({std::to_string(u), p.xi_nonzero ? "1" : "0", std::to_string(p.phi_rank),
                            std::to_string(p.phi_kernel), std::to_string(p.equivariance_failures),
                            p.non_split_signal ? "1" : "0"});
    res.pass = p.phi_well_defined && p.equivariance_failures == 0;

    if (cfg.i + 2 <= wb.field->max_level()) {
        ExtParams next = ctx.params();
        next.i = cfg.i + 1;
        ExtContext ctx2(wb.chars, next);
        const int u2 = choose_u(ctx2, cfg.threads);
        if (u2 >= 0) {
            const CompositionReport c = check_composition(ctx, u, ctx2, u2);
            res.report["composition"] = {{"u2", u2},
                                         {"product_matches", c.product_matches},
                                         {"inclusion_transitive", c.inclusion_transitive},
                                         {"equivariant", c.equivariant},
                                         {"injective", c.injective}};
            res.pass = res.pass && c.product_matches && c.inclusion_transitive && c.equivariant;
        }
    }
    res.report["pass"] = res.pass;
    return res;
}

struct SplitPoint {
    Character lambda;
    SubsetJ J;
    Character mu;
    SubsetJ K;
};

CommandResult ext_split(const RunConfig& cfg, const Workbench& wb)
{
    require_level(wb, cfg.k);
    const int r = wb.roots->rank();
    std::vector<SplitPoint> grid;
    if (cfg.grid == "full") {
        std::vector<std::pair<Character, SubsetJ>> params;
        for (const Character& c : wb.chars->all())
            for (SubsetJ J : subsets_of(wb.chars->i_theta(c, cfg.k))) params.push_back({c, J});
        for (const auto& [l, J] : params)
            for (const auto& [m, K] : params)
                if (choose_c0(*wb.chars, l, m, cfg.k)) grid.push_back({l, J, m, K});
    } else {
        grid.push_back({wb.character(cfg.lambda), subset_from(cfg.J, r), wb.character(cfg.mu), subset_from(cfg.K, r)});
    }

    CommandResult res;
    res.report = base_report(cfg, wb, "ext split");
    res.csv_header = {"lambda", "J", "mu", "K", "a", "b", "trials", "successes"};
    json points = json::array();
    std::mt19937_64 rng(cfg.seed);
    for (const SplitPoint& pt : grid) {
        const auto c0 = choose_c0(*wb.chars, pt.lambda, pt.mu, cfg.k);
        require(c0.has_value(), "split: no central element separates lambda and mu at this level");
        PrincipalSeries lam(wb.chars, pt.lambda, cfg.k);
        PrincipalSeries mu(wb.chars, pt.mu, cfg.k);
        require(pt.J.subset_of(lam.i_theta()), "split: J must lie inside I(lambda)");
        require(pt.K.subset_of(mu.i_theta()), "split: K must lie inside I(mu)");
        const Torus t = wb.group->diagonal(*c0);
        const Coef a = wb.chars->eval(pt.lambda, t);
        const Coef b = wb.chars->eval(pt.mu, t);
        int successes = 0;
        for (int s = 0; s < cfg.samples; ++s) {
            const SynthExtension M = synthesize_extension(lam, pt.J, mu, pt.K, *c0, true, rng);
            successes += central_split(wb.chars->F(), M, a, b).pass();
        }
        const SplitReport plain = central_split(wb.chars->F(), synthesize_extension(lam, pt.J, mu, pt.K, *c0, false, rng), a, b);
        const bool ok = successes == cfg.samples && plain.pass();
        res.pass = res.pass && ok;
        points.push_back({{"lambda", char_json(pt.lambda)},
                          {"J", subset_json(pt.J)},
                          {"mu", char_json(pt.mu)},
                          {"K", subset_json(pt.K)},
                          {"c0", wb.group->field().level_index(t[0], wb.field->max_level())},
                          {"a", a},
                          {"b", b},
                          {"eigen_dim", plain.eigen_dim},
                          {"trials", cfg.samples},
                          {"successes", successes},
                          {"identity_gluing_pass", plain.pass()},
                          {"pass", ok}});
        res.csv_rows.push_back({char_csv(pt.lambda), str(pt.J.mask), char_csv(pt.mu), str(pt.K.mask), str(a), str(b),
                                std::to_string(cfg.samples), std::to_string(successes)});
    }
    res.report["points"] = points;
    res.report["pass"] = res.pass;
    return res;
}

} // namespace

CommandResult cmd_verify(const RunConfig& cfg, const std::string& which)
{
    const Workbench wb = Workbench::build(cfg);
    if (which != "rank1") require_level(wb, cfg.k);
    if (which == "basis") return verify_basis(cfg, wb);
    if (which == "intertwiner") return verify_intertwiner(cfg, wb);
    if (which == "rank1") return verify_rank1(cfg, wb);
    if (which == "socle") return verify_socle(cfg, wb);
    if (which == "action") return verify_action(cfg, wb);
    throw PreconditionError("verify: unknown check '" + which + "'");
}

CommandResult cmd_ext(const RunConfig& cfg, const std::string& which)
{
    const Workbench wb = Workbench::build(cfg);
    if (which == "split") return ext_split(cfg, wb);
    const std::vector<std::string> known = {"omega", "gamma", "xi", "club", "probe"};
    require(std::find(known.begin(), known.end(), which) != known.end(), "ext: unknown census '" + which + "'");
    const ExtContext ctx(wb.chars, ext_params(cfg, wb));
    if (which == "omega") return ext_omega(cfg, wb, ctx);
    if (which == "gamma") return ext_gamma(cfg, wb, ctx);
    if (which == "xi") return ext_xi(cfg, wb, ctx);
    if (which == "club") return ext_club(cfg, wb, ctx);
    return ext_probe(cfg, wb, ctx);
}

} // namespace pslab
