#include "pslab/extension_lab.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pslab/census.hpp"
#include "pslab/errors.hpp"

namespace pslab {

namespace {

std::uint64_t ipow(std::uint64_t b, int e)
{
    std::uint64_t r = 1;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        a[i] < b[j] ? ++i : ++j;
    }
    return true;
}

Matrix rho(const PrincipalSeries& lam, SubsetJ J, const PrincipalSeries& mu, SubsetJ K, const Mat& g)
{
    return block_diag(lam.matrix_E(J, g), mu.matrix_E(K, g));
}

} // namespace

ExtContext::ExtContext(std::shared_ptr<const CharacterTable> chars, ExtParams params)
    : chars_(std::move(chars)), params_(std::move(params))
{
    const Chevalley& G = group();
    const RootSystem& R = G.roots();
    const int i = params_.i;
    require(i >= 1 && i + 1 <= G.field().max_level(), "extension context needs levels i and i+1 inside the tower");
    const SubsetJ Il = chars_->i_theta(params_.lambda);
    require(params_.J.subset_of(Il), "J must lie inside I(lambda)");
    require(params_.K.subset_of(chars_->i_theta(params_.mu)), "K must lie inside I(mu)");
    Jp_ = Il.minus(params_.J);

    lam_i_ = std::make_shared<PrincipalSeries>(chars_, params_.lambda, i);
    lam_next_ = std::make_shared<PrincipalSeries>(chars_, params_.lambda, i + 1);
    mu_i_ = std::make_shared<PrincipalSeries>(chars_, params_.mu, i);
    mu_next_ = std::make_shared<PrincipalSeries>(chars_, params_.mu, i + 1);

    U_next_ = G.unipotents(R.positive_roots(), i + 1);
    in_U_i_.resize(U_next_.size());
    for (std::size_t x = 0; x < U_next_.size(); ++x) in_U_i_[x] = G.in_level(U_next_[x], i);

    S_ = Subspace(E_mu(i + 1).dim(), F());
    const Mat& w0 = G.wdot(R.longest());
    for (const Mat& x : U_next_) S_.insert(image_eta_mu(G.mul(x, w0)));

    const InducedModule& Mmu = mu_next_->module();
    P_ = G.enumerate(SubgroupKind::P_J, i, {}, Jp_);
    for (const Mat& p : P_) {
        P_weight_.push_back(F().inv(chars_->eval_parabolic(params_.lambda, Jp_, p)));
        P_action_.push_back(Mmu.action_of(p));
    }
    for (auto y : R.parabolic(params_.J))
        alt_.emplace_back(R.length(y) % 2 ? F().neg(1) : 1, Mmu.action_of(G.wdot_in(params_.J, y)));

    for (const Mat& g : G.enumerate(SubgroupKind::G, i)) {
        if (G.is_scalar(g)) continue;
        G_nc_.push_back(g);
        G_nc_cell_.push_back(G.bruhat_form(g).w);
    }
}

int ExtContext::u_index(const Mat& u) const
{
    const Chevalley& G = group();
    const FieldTower& K = G.field();
    const int k = params_.i + 1;
    require(G.is_unitriangular(u) && G.in_level(u, k), "u must lie in U_{i+1}");
    std::uint64_t idx = 0;
    for (Root a : G.roots().positive_roots()) idx = idx * K.level_size(k) + K.level_index(u(a.i, a.j), k);
    return static_cast<int>(idx);
}

Vec ExtContext::image_eta_mu(const Mat& g) const
{
    const EModule& E = E_mu(params_.i + 1);
    const auto c = E.E.project(mu_next_->module().act(g, E.eta));
    require(c.has_value(), "image left M(mu)_K");
    return *c;
}

OmegaCensus omega_census(const ExtContext& ctx, int threads)
{
    const Chevalley& G = ctx.group();
    const RootSystem& R = G.roots();
    const auto& U = ctx.U_next();
    const std::size_t nu = U.size();
    const auto W = R.elements();
    const Mat& w0 = G.wdot(R.longest());

    const auto flat = census_parallel<std::uint8_t>(W.size() * nu, threads, [&](std::size_t j) {
        const WeylElt w = W[j / nu];
        const Mat g = G.mul(G.mul(G.wdot(w), U[j % nu]), w0);
        return static_cast<std::uint8_t>(ctx.target().contains(ctx.image_eta_mu(g)));
    });

    OmegaCensus out;
    const std::uint64_t qt = ctx.qt();
    const int n = R.num_positive();
    for (auto w : W) {
        out.member.emplace_back(flat.begin() + w.id * nu, flat.begin() + (w.id + 1) * nu);
        OmegaRow row;
        row.w = w;
        row.name = R.name(w);
        row.length = R.length(w);
        const auto inv = R.phi_minus(w);
        for (std::size_t x = 0; x < nu; ++x) {
            row.omega += out.member.back()[x];
            if (!out.member.back()[x] && G.supported_on(U[x], inv)) ++row.omega_prime;
        }
        const int l = row.length;
        row.bound = std::pow(3.0 * static_cast<double>(qt), l - 1);
        row.bound_ok = row.omega_prime * 3 * qt <= ipow(3 * qt, l);
        row.factor_ok = row.omega == ipow(qt, n - l) * (ipow(qt, l) - row.omega_prime);
        const __int128 lhs = static_cast<__int128>(3) * row.omega;
        const __int128 rhs = static_cast<__int128>(ipow(qt, n - 1)) * (3 * static_cast<__int128>(qt) - ipow(3, l));
        row.lower_ok = lhs >= rhs;
        out.P_value_times3 += ipow(3, l);
        out.rows.push_back(row);
    }

    std::vector<std::uint8_t> all(nu, 1);
    for (const auto& m : out.member)
        for (std::size_t x = 0; x < nu; ++x) all[x] = all[x] && m[x];
    out.in_omega = census_parallel<std::uint8_t>(nu, threads, [&](std::size_t u) {
        for (int y : h_set(ctx, u))
            if (!all[y]) return std::uint8_t{0};
        return std::uint8_t{1};
    });
    for (std::size_t u = 0; u < nu; ++u) {
        out.omega_size += out.in_omega[u];
        out.omega_meets_U_i += out.in_omega[u] && ctx.in_U_i(u);
    }
    return out;
}

std::vector<int> h_set(const ExtContext& ctx, std::size_t u)
{
    const Chevalley& G = ctx.group();
    const auto& U = ctx.U_next();
    std::set<int> out;
    for (const Torus& t : G.torus(ctx.level())) {
        const Mat d = G.diag(t);
        const Mat conj = G.mul(G.mul(d, U[u]), G.inverse(d));
        for (std::size_t y = 0; y < U.size(); ++y)
            if (ctx.in_U_i(y)) out.insert(ctx.u_index(G.mul(U[y], conj)));
    }
    return {out.begin(), out.end()};
}

HReport h_partition(const ExtContext& ctx, int threads)
{
    const Chevalley& G = ctx.group();
    const std::size_t nu = ctx.U_next().size();
    const auto H = census_parallel<std::vector<int>>(nu, threads, [&](std::size_t u) { return h_set(ctx, u); });
    HReport rep;
    rep.partition = true;
    rep.contains_self = true;
    std::set<std::vector<int>> distinct;
    for (std::size_t x = 0; x < nu; ++x) {
        distinct.insert(H[x]);
        rep.contains_self = rep.contains_self && std::binary_search(H[x].begin(), H[x].end(), static_cast<int>(x));
        for (std::size_t y = x + 1; y < nu; ++y)
            rep.partition = rep.partition && (H[x] == H[y] || disjoint(H[x], H[y]));
    }
    rep.classes = distinct.size();
    const std::uint64_t ui = ipow(G.field().level_size(ctx.level()), G.roots().num_positive());
    const std::uint64_t ti = ipow(G.field().level_size(ctx.level()) - 1, G.roots().rank());
    rep.class_lower_bound = (nu + ui * ti - 1) / (ui * ti);
    return rep;
}

GammaReport gamma_set(const ExtContext& ctx, const OmegaCensus& census, int threads)
{
    const Chevalley& G = ctx.group();
    const RootSystem& R = G.roots();
    const auto& U = ctx.U_next();
    const Mat& w0 = G.wdot(R.longest());
    const Mat w0_inv = G.inverse(w0);
    const auto& gs = ctx.G_noncentral();
    const auto& cells = ctx.G_noncentral_cell();

    const auto masks = census_parallel<std::uint32_t>(U.size(), threads, [&](std::size_t u) {
        std::uint32_t mask = 0;
        if (!census.in_omega[u]) return mask;
        const Mat left = G.mul(w0_inv, G.inverse(U[u]));
        const Mat right = G.mul(U[u], w0);
        for (std::size_t j = 0; j < gs.size(); ++j) {
            if (mask >> cells[j].id & 1u) continue;
            if (G.is_upper_triangular(G.mul(G.mul(left, gs[j]), right))) mask |= 1u << cells[j].id;
        }
        return mask;
    });

    GammaReport rep;
    rep.cell_counts.assign(R.order(), 0);
    rep.in_gamma.resize(U.size());
    for (std::size_t u = 0; u < U.size(); ++u) {
        rep.in_gamma[u] = masks[u] != 0;
        rep.gamma_size += rep.in_gamma[u];
        rep.omega_minus_gamma += census.in_omega[u] && !rep.in_gamma[u];
        for (std::size_t w = 0; w < R.order(); ++w) rep.cell_counts[w] += masks[u] >> w & 1u;
    }
    rep.gamma_e_empty = rep.cell_counts[R.identity().id] == 0;
    return rep;
}

bool claim_club(const ExtContext& ctx, const Mat& u)
{
    const Chevalley& G = ctx.group();
    const RootSystem& R = G.roots();
    const Mat left = G.mul(G.inverse(G.wdot(R.longest())), G.inverse(u));
    std::vector<Mat> right;
    for (auto w : R.elements()) right.push_back(G.mul(u, G.wdot(w)));
    for (const Mat& g : ctx.G_noncentral()) {
        const Mat lg = G.mul(left, g);
        for (const Mat& r : right)
            if (G.is_upper_triangular(G.mul(lg, r))) return false;
    }
    return true;
}

XiResult xi(const ExtContext& ctx, const Mat& u)
{
    const Chevalley& G = ctx.group();
    const PrimeField& F = ctx.F();
    const int next = ctx.level() + 1;
    require(G.is_unitriangular(u) && G.in_level(u, next), "xi: u must lie in U_{i+1}");
    const InducedModule& M = ctx.mu_at(next).module();
    const EModule& E = ctx.E_mu(next);

    const Vec v0 = M.act(G.mul(u, G.wdot(G.roots().longest())), E.eta);
    Vec eta_i = M.zero();
    const auto& acts = ctx.parabolic_action();
    const auto& weights = ctx.parabolic_weight();
    for (std::size_t p = 0; p < acts.size(); ++p) axpy(F, eta_i, weights[p], M.apply(acts[p], v0));

    XiResult out;
    out.eigen_ok = true;
    for (std::size_t p = 0; p < acts.size() && out.eigen_ok; ++p)
        out.eigen_ok = M.apply(acts[p], eta_i) == scale(F, F.inv(weights[p]), eta_i);

    out.xi_M = M.zero();
    for (const auto& [sign, act] : ctx.alternating()) axpy(F, out.xi_M, sign, M.apply(act, eta_i));
    const auto c = E.E.project(out.xi_M);
    require(c.has_value(), "xi: vector left M(mu)_K");
    out.xi = *c;
    out.nonzero = !is_zero(out.xi);
    return out;
}

ClubCensus club_census(const ExtContext& ctx, int threads)
{
    const auto& U = ctx.U_next();
    ClubCensus out;
    out.rows = census_parallel<ClubRow>(U.size(), threads, [&](std::size_t u) {
        const XiResult x = xi(ctx, U[u]);
        return ClubRow{claim_club(ctx, U[u]), x.nonzero, x.eigen_ok};
    });
    out.eigen_ok = true;
    for (std::size_t u = 0; u < U.size(); ++u) {
        const auto& r = out.rows[u];
        out.club_true += r.club;
        out.xi_nonzero += r.xi_nonzero;
        out.eigen_ok = out.eigen_ok && r.eigen_ok;
        if (r.club && !r.xi_nonzero) out.counterexamples.push_back(static_cast<int>(u));
    }
    return out;
}

PhiMap phi_map(const ExtContext& ctx, const XiResult& x)
{
    const PrimeField& F = ctx.F();
    const int i = ctx.level();
    const auto& params = ctx.params();
    const PrincipalSeries& lam = ctx.lambda_at(i);
    const PrincipalSeries& mu = ctx.mu_at(i + 1);
    const EModule& El = lam.e(params.J);
    const EModule& Em = mu.e(params.K);
    const int dl = El.dim(), dm = Em.dim();
    const auto& gens = lam.module().generators();
    std::vector<Action> mu_acts;
    for (const Mat& g : gens) mu_acts.push_back(mu.module().action_of(g));

    Subspace graph(dl + dm, F);
    for (std::size_t j = 0; j < El.MJ.raw.size(); ++j) {
        const auto a = El.E.project(El.MJ.raw[j]);
        Vec t = x.xi_M;
        for (int letter : El.MJ.words[j]) t = mu.module().apply(mu_acts[letter], t);
        const auto b = Em.E.project(t);
        require(a.has_value() && b.has_value(), "phi: translate left its module");
        Vec ab = *a;
        ab.insert(ab.end(), b->begin(), b->end());
        graph.insert(ab);
    }

    PhiMap out;
    out.phi = Matrix::zero(dm, dl);
    out.well_defined = graph.dim() == dl && (dl == 0 || graph.pivots().back() < dl);
    if (!out.well_defined) return out;
    for (int c = 0; c < dl; ++c)
        for (int r = 0; r < dm; ++r) out.phi.a[r][c] = graph.rows()[c][dl + r];
    out.rank = rank(F, out.phi);
    out.kernel_dim = dl - out.rank;

    for (const Mat& g : gens) {
        const Matrix lhs = mat_mul(F, out.phi, lam.matrix_E(params.J, g));
        const Matrix rhs = mat_mul(F, mu.matrix_E(params.K, g), out.phi);
        for (int c = 0; c < dl; ++c) {
            ++out.checks;
            out.failures += lhs.column(c) != rhs.column(c);
        }
    }
    return out;
}

Matrix level_inclusion(const PrincipalSeries& lower, const PrincipalSeries& upper, SubsetJ J)
{
    const InducedModule& Ml = lower.module();
    const InducedModule& Mu = upper.module();
    require(Ml.level() <= Mu.level() && Ml.theta() == Mu.theta(), "level_inclusion: incompatible modules");
    const EModule& El = lower.e(J);
    const EModule& Eu = upper.e(J);
    Matrix out = Matrix::zero(Eu.dim(), El.dim());
    for (int c = 0; c < El.dim(); ++c) {
        Vec e(El.dim(), 0);
        e[c] = 1;
        const Vec v = El.E.lift(e);
        Vec w = Mu.zero();
        for (int k = 0; k < Ml.dim(); ++k) {
            if (v[k] == 0) continue;
            const auto& key = Ml.keys()[k];
            w[Mu.index_of(key.w, key.u)] = v[k];
        }
        const auto img = Eu.E.project(w);
        require(img.has_value(), "level_inclusion: image left M_J");
        for (int r = 0; r < Eu.dim(); ++r) out.a[r][c] = (*img)[r];
    }
    return out;
}

namespace {

/// [[I_lambda, 0], [phi, I_mu]]
Matrix assemble_f(const Matrix& Il, const Matrix& Im, const Matrix& phi)
{
    Matrix f = Matrix::zero(Il.rows + Im.rows, Il.cols + Im.cols);
    for (int r = 0; r < Il.rows; ++r)
        for (int c = 0; c < Il.cols; ++c) f.a[r][c] = Il.a[r][c];
    for (int r = 0; r < Im.rows; ++r) {
        for (int c = 0; c < Il.cols; ++c) f.a[Il.rows + r][c] = phi.a[r][c];
        for (int c = 0; c < Im.cols; ++c) f.a[Il.rows + r][Il.cols + c] = Im.a[r][c];
    }
    return f;
}

} // namespace

ProbeReport twisted_probe(const ExtContext& ctx, int u)
{
    const PrimeField& F = ctx.F();
    const Chevalley& G = ctx.group();
    const RootSystem& R = G.roots();
    const auto& params = ctx.params();
    const int i = ctx.level();
    require(u >= 0 && u < static_cast<int>(ctx.U_next().size()), "probe: u index out of range");

    ProbeReport rep;
    rep.u = u;
    const XiResult x = xi(ctx, ctx.U_next()[u]);
    rep.xi_nonzero = x.nonzero;
    const PhiMap phi = phi_map(ctx, x);
    rep.phi_well_defined = phi.well_defined;
    rep.phi_rank = phi.rank;
    rep.phi_kernel = phi.kernel_dim;
    rep.equivariance_failures = phi.failures;

    const Matrix Il = level_inclusion(ctx.lambda_at(i), ctx.lambda_at(i + 1), params.J);
    const Matrix Im = level_inclusion(ctx.mu_at(i), ctx.mu_at(i + 1), params.K);
    rep.inclusions_injective = rank(F, Il) == Il.cols && rank(F, Im) == Im.cols;
    rep.f = assemble_f(Il, Im, phi.phi);
    rep.dim_Mi = rep.f.cols;
    rep.dim_Mnext = rep.f.rows;

    Matrix stacked{0, rep.dim_Mnext, {}};
    for (const Mat& g : G.unipotent_generators(R.phi_plus(R.longest(params.J)), i + 1)) {
        const Matrix d = mat_sub(F, rho(ctx.lambda_at(i + 1), params.J, ctx.mu_at(i + 1), params.K, g),
                                 Matrix::identity(rep.dim_Mnext));
        for (const auto& row : d.a) stacked.a.push_back(row);
        stacked.rows += d.rows;
    }
    Subspace fixed(rep.dim_Mnext, F);
    for (const auto& v : nullspace(F, stacked)) fixed.insert(v);
    rep.dim_fixed = fixed.dim();

    const Subspace meet = column_space(F, rep.f).intersect(fixed);
    rep.dim_image_fixed = meet.dim();
    Subspace lambda_part(Il.rows, F);
    for (const auto& row : meet.rows()) lambda_part.insert(Vec(row.begin(), row.begin() + Il.rows));
    rep.dim_image_fixed_lambda = lambda_part.dim();
    rep.non_split_signal = rep.inclusions_injective && rep.dim_image_fixed_lambda == 0;
    return rep;
}

int choose_u(const ExtContext& ctx, int threads)
{
    const OmegaCensus om = omega_census(ctx, threads);
    const GammaReport gm = gamma_set(ctx, om, threads);
    const ClubCensus cl = club_census(ctx, threads);
    for (std::size_t u = 0; u < cl.rows.size(); ++u)
        if (om.in_omega[u] && !gm.in_gamma[u] && cl.rows[u].club && cl.rows[u].xi_nonzero) return static_cast<int>(u);
    for (std::size_t u = 0; u < cl.rows.size(); ++u)
        if (cl.rows[u].xi_nonzero) return static_cast<int>(u);
    return -1;
}

CompositionReport check_composition(const ExtContext& first, int u1, const ExtContext& second, int u2)
{
    const PrimeField& F = first.F();
    const auto& s1 = first.params();
    const auto& s2 = second.params();
    require(second.level() == first.level() + 1, "composition: contexts must be consecutive");
    require(s1.lambda == s2.lambda && s1.mu == s2.mu && s1.J == s2.J && s1.K == s2.K,
            "composition: contexts must share parameters");
    const int i = first.level();

    const ProbeReport p1 = twisted_probe(first, u1);
    const ProbeReport p2 = twisted_probe(second, u2);
    CompositionReport rep;
    const Matrix f13 = mat_mul(F, p2.f, p1.f);

    const Matrix Il12 = level_inclusion(first.lambda_at(i), first.lambda_at(i + 1), s1.J);
    const Matrix Il23 = level_inclusion(second.lambda_at(i + 1), second.lambda_at(i + 2), s1.J);
    const Matrix Il13 = level_inclusion(first.lambda_at(i), second.lambda_at(i + 2), s1.J);
    const Matrix Im12 = level_inclusion(first.mu_at(i), first.mu_at(i + 1), s1.K);
    const Matrix Im23 = level_inclusion(second.mu_at(i + 1), second.mu_at(i + 2), s1.K);
    const Matrix Im13 = level_inclusion(first.mu_at(i), second.mu_at(i + 2), s1.K);
    rep.inclusion_transitive = mat_mul(F, Il23, Il12) == Il13 && mat_mul(F, Im23, Im12) == Im13;

    const Matrix phi1 = phi_map(first, xi(first, first.U_next()[u1])).phi;
    const Matrix phi2 = phi_map(second, xi(second, second.U_next()[u2])).phi;
    Matrix glue = mat_mul(F, Im23, phi1);
    const Matrix other = mat_mul(F, phi2, Il12);
    for (int r = 0; r < glue.rows; ++r) glue.a[r] = add(F, glue.a[r], other.a[r]);
    rep.product_matches = f13 == assemble_f(Il13, Im13, glue);

    rep.equivariant = true;
    for (const Mat& g : first.lambda_at(i).module().generators()) {
        const Matrix lo = rho(first.lambda_at(i), s1.J, first.mu_at(i), s1.K, g);
        const Matrix hi = rho(second.lambda_at(i + 2), s1.J, second.mu_at(i + 2), s1.K, g);
        rep.equivariant = rep.equivariant && mat_mul(F, hi, f13) == mat_mul(F, f13, lo);
    }
    rep.injective = rank(F, f13) == f13.cols;
    return rep;
}

SplitReport central_split(const PrimeField& F, const SynthExtension& M, Coef a, Coef b)
{
    require(a != b, "central_split: c0 must separate the two central characters");
    const int n = M.d_lambda + M.d_mu;
    SplitReport rep;
    rep.a = a;
    rep.b = b;
    Matrix shifted = M.c0;
    for (int k = 0; k < n; ++k) shifted.a[k][k] = F.sub(shifted.a[k][k], a);
    Subspace eig(n, F);
    for (const auto& v : nullspace(F, shifted)) eig.insert(v);
    rep.eigen_dim = eig.dim();

    Subspace total = eig;
    for (int k = M.d_lambda; k < n; ++k) {
        Vec e(n, 0);
        e[k] = 1;
        total.insert(e);
    }
    rep.complement = total.dim() == n && eig.dim() + M.d_mu == n;

    rep.stable = true;
    for (const Matrix& g : M.gens)
        for (const auto& row : eig.rows()) rep.stable = rep.stable && eig.contains(mat_vec(F, g, row));

    if (M.d_lambda > 0) {
        Vec x(n, 0);
        x[0] = 1;
        Vec m0 = mat_vec(F, M.c0, x);
        axpy(F, m0, F.neg(a), x);
        bool in_sub = true;
        for (int k = 0; k < M.d_lambda; ++k) in_sub = in_sub && m0[k] == 0;
        Vec v0 = x;
        axpy(F, v0, F.inv(F.sub(a, b)), m0);
        rep.v0_in_eigen = in_sub && eig.contains(v0);
    }
    return rep;
}

std::optional<Mat> choose_c0(const CharacterTable& chars, const Character& lambda, const Character& mu, int k)
{
    const Chevalley& G = chars.group();
    for (const Mat& z : G.center(G.field().max_level())) {
        if (!G.in_level(z, k)) continue;
        const Torus t = G.diagonal(z);
        if (chars.eval(lambda, t) != chars.eval(mu, t)) return z;
    }
    return std::nullopt;
}

SynthExtension synthesize_extension(const PrincipalSeries& lam, SubsetJ J, const PrincipalSeries& mu, SubsetJ K,
                                    const Mat& c0, bool twist, std::mt19937_64& rng)
{
    require(lam.module().level() == mu.module().level(), "synthesize_extension: levels differ");
    const PrimeField& F = lam.module().F();
    SynthExtension out;
    out.d_lambda = lam.e(J).dim();
    out.d_mu = mu.e(K).dim();
    const int n = out.d_lambda + out.d_mu;

    Matrix P = Matrix::identity(n);
    if (twist) {
        std::uniform_int_distribution<Coef> pick(0, F.modulus() - 1);
        auto random_invertible = [&](int d) {
            while (true) {
                Matrix m = Matrix::zero(d, d);
                for (auto& row : m.a)
                    for (auto& x : row) x = pick(rng);
                if (rank(F, m) == d) return m;
            }
        };
        const Matrix P1 = random_invertible(out.d_lambda);
        const Matrix P2 = random_invertible(out.d_mu);
        P = block_diag(P1, P2);
        for (int r = out.d_lambda; r < n; ++r)
            for (int c = 0; c < out.d_lambda; ++c) P.a[r][c] = pick(rng);
    }
    const Matrix Pinv = *inverse(F, P);
    auto conj = [&](const Mat& g) { return mat_mul(F, mat_mul(F, P, rho(lam, J, mu, K, g)), Pinv); };
    for (const Mat& g : lam.module().generators()) out.gens.push_back(conj(g));
    out.c0 = conj(c0);
    return out;
}

} // namespace pslab
