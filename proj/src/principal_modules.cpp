#include "pslab/principal_modules.hpp"

#include <deque>

#include "pslab/errors.hpp"

namespace pslab {

InducedModule::InducedModule(std::shared_ptr<const CharacterTable> chars, Character theta, int k, SubsetJ Jp)
    : chars_(std::move(chars)), theta_(std::move(theta)), k_(k), Jp_(Jp)
{
    const Chevalley& G = group();
    const RootSystem& R = G.roots();
    require(k >= 1 && k <= G.field().max_level(), "module level out of range");
    require(Jp.subset_of(chars_->i_theta(theta_)), "J' must lie inside I(theta)");

    const auto reps = R.min_coset_reps(Jp);
    const std::uint64_t qt = G.field().level_size(k);
    std::uint64_t total = 0;
    for (auto w : reps) {
        std::uint64_t c = 1;
        for (int s = 0; s < R.length(w); ++s) c *= qt;
        total += c;
    }
    require_budget(total <= kModuleBudget, "module basis exceeds budget");

    offset_.assign(R.order(), -1);
    for (auto w : reps) {
        offset_[w.id] = static_cast<int>(keys_.size());
        for (const Mat& u : G.unipotents(R.phi_minus(R.inverse(w)), k)) keys_.push_back({w, u});
    }
    gens_ = G.generators(k);
    for (const Mat& g : gens_) gen_actions_.push_back(action_of(g));
}

int InducedModule::index_of(WeylElt w, const Mat& u) const
{
    const int off = offset_[w.id];
    if (off < 0) return -1;
    const Chevalley& G = group();
    const FieldTower& K = G.field();
    const auto roots = G.roots().phi_minus(G.roots().inverse(w));
    if (!G.supported_on(u, roots)) return -1;
    const std::uint64_t qt = K.level_size(k_);
    std::uint64_t idx = 0;
    for (Root a : roots) {
        const Elt e = u(a.i, a.j);
        if (!K.in_level(e, k_)) return -1;
        idx = idx * qt + K.level_index(e, k_);
    }
    return off + static_cast<int>(idx);
}

std::string InducedModule::label(int idx) const
{
    const Chevalley& G = group();
    const BasisKey& key = keys_[idx];
    std::string s = G.roots().name(key.w);
    s += "[";
    bool first = true;
    for (Root a : G.roots().phi_minus(G.roots().inverse(key.w))) {
        if (!first) s += ",";
        s += std::to_string(G.field().level_index(key.u(a.i, a.j), k_));
        first = false;
    }
    return s + "]";
}

Vec InducedModule::unit(int idx) const
{
    Vec v = zero();
    v[idx] = 1;
    return v;
}

std::pair<int, Coef> InducedModule::act_basis(const Mat& g, int idx) const
{
    const Chevalley& G = group();
    const RootSystem& R = G.roots();
    const BasisKey& key = keys_[idx];
    const Mat h = G.mul(G.mul(g, key.u), G.wdot(key.w));
    const BruhatForm b = G.bruhat_form(h);
    if (Jp_.empty()) {
        const int target = index_of(b.w, b.u);
        require(target >= 0, "act: group element outside level " + std::to_string(k_));
        return {target, chars_->eval(theta_, b.t)};
    }
    WeylElt w = b.w;
    for (bool reduced = true; reduced;) {
        reduced = false;
        for (int j : Jp_.indices()) {
            const WeylElt ws = R.multiply(w, R.simple(j));
            if (R.length(ws) < R.length(w)) {
                w = ws;
                reduced = true;
            }
        }
    }
    // u_1 = u' u'' with u' in U_{w^{-1}}; L = u'^{-1}
    Mat x = b.u, L = G.identity();
    for (Root a : R.phi_minus(R.inverse(w))) {
        const Elt c = x(a.i, a.j);
        if (c == 0) continue;
        const Mat e = G.eps(a, G.field().neg(c));
        x = G.mul(e, x);
        L = G.mul(e, L);
    }
    const Mat up = G.inverse(L);
    const int target = index_of(w, up);
    require(target >= 0, "act: group element outside level " + std::to_string(k_));
    const Mat p = G.mul(G.mul(G.inverse(G.wdot(w)), L), h);
    return {target, chars_->eval_parabolic(theta_, Jp_, p)};
}

Vec InducedModule::act(const Mat& g, const Vec& v) const
{
    const PrimeField& K = F();
    Vec out = zero();
    for (int j = 0; j < dim(); ++j) {
        if (v[j] == 0) continue;
        const auto [t, s] = act_basis(g, j);
        out[t] = K.add(out[t], K.mul(s, v[j]));
    }
    return out;
}

Action InducedModule::action_of(const Mat& g) const
{
    Action a;
    a.target.resize(dim());
    a.scalar.resize(dim());
    for (int j = 0; j < dim(); ++j) std::tie(a.target[j], a.scalar[j]) = act_basis(g, j);
    return a;
}

Vec InducedModule::apply(const Action& a, const Vec& v) const
{
    const PrimeField& K = F();
    Vec out = zero();
    for (int j = 0; j < dim(); ++j)
        if (v[j] != 0) out[a.target[j]] = K.add(out[a.target[j]], K.mul(a.scalar[j], v[j]));
    return out;
}

Vec InducedModule::eta(SubsetJ J) const
{
    require(J.subset_of(chars_->i_theta(theta_)), "eta: J must lie inside I(theta)");
    require((J & Jp_).empty(), "eta: J must be disjoint from J'");
    const Chevalley& G = group();
    const PrimeField& K = F();
    Vec out = zero();
    for (auto w : G.roots().parabolic(J)) {
        const Vec v = act(G.wdot_in(J, w), base());
        axpy(K, out, G.roots().length(w) % 2 ? K.neg(1) : 1, v);
    }
    return out;
}

SpinResult spin(const InducedModule& M, const std::vector<Vec>& seeds)
{
    SpinResult out{Subspace(M.dim(), M.F()), {}, {}, {}};
    std::deque<int> queue;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        if (!out.space.insert(seeds[s])) continue;
        out.raw.push_back(seeds[s]);
        out.words.push_back({});
        out.seed_of.push_back(static_cast<int>(s));
        queue.push_back(static_cast<int>(out.raw.size()) - 1);
    }
    const auto& actions = M.generator_actions();
    while (!queue.empty()) {
        const int j = queue.front();
        queue.pop_front();
        for (std::size_t a = 0; a < actions.size(); ++a) {
            Vec v = M.apply(actions[a], out.raw[j]);
            if (!out.space.insert(v)) continue;
            auto word = out.words[j];
            word.push_back(static_cast<int>(a));
            out.raw.push_back(std::move(v));
            out.words.push_back(std::move(word));
            out.seed_of.push_back(out.seed_of[j]);
            queue.push_back(static_cast<int>(out.raw.size()) - 1);
        }
    }
    return out;
}

Quotient::Quotient(Subspace top, Subspace sub) : top_(std::move(top)), sub_(std::move(sub))
{
    require(top_.contains(sub_), "Quotient: submodule not contained in module");
    complement_ = Subspace(top_.ambient(), top_.field());
    for (const auto& row : top_.rows()) complement_.insert(sub_.reduce(row));
}

std::optional<Vec> Quotient::project(const Vec& v) const
{
    return complement_.coordinates(sub_.reduce(v));
}

Vec Quotient::lift(const Vec& coords) const
{
    Vec v(top_.ambient(), 0);
    for (int j = 0; j < complement_.dim(); ++j) axpy(top_.field(), v, coords[j], complement_.rows()[j]);
    return v;
}

PrincipalSeries::PrincipalSeries(std::shared_ptr<const CharacterTable> chars, Character theta, int k)
{
    M_ = std::make_shared<InducedModule>(chars, theta, k);
    itheta_ = chars->i_theta(theta);
    for (SubsetJ J : subsets_of(itheta_)) {
        EModule E;
        E.J = J;
        E.eta = M_->eta(J);
        E.MJ = spin(*M_, {E.eta});
        e_.emplace(J, std::move(E));
    }
    for (auto& [J, E] : e_) {
        Subspace N(M_->dim(), M_->F());
        for (const auto& [K, other] : e_)
            if (J.subset_of(K) && J != K) N = N.sum(other.MJ.space);
        E.n_inside_m = E.MJ.space.contains(N);
        E.N = E.n_inside_m ? N : N.intersect(E.MJ.space);
        E.E = Quotient(E.MJ.space, E.N);
        E.C = *E.E.project(E.eta);
    }
}

const EModule& PrincipalSeries::e(SubsetJ J) const
{
    const auto it = e_.find(J);
    require(it != e_.end(), "J must lie inside I(theta)");
    return it->second;
}

Vec PrincipalSeries::act_E(SubsetJ J, const Mat& g, const Vec& c) const
{
    const EModule& E = e(J);
    const auto img = E.E.project(M_->act(g, E.E.lift(c)));
    require(img.has_value(), "act_E: image left M_J");
    return *img;
}

Matrix PrincipalSeries::matrix_E(SubsetJ J, const Mat& g) const
{
    const int d = e(J).dim();
    Matrix out = Matrix::zero(d, d);
    for (int j = 0; j < d; ++j) {
        Vec c(d, 0);
        c[j] = 1;
        const Vec img = act_E(J, g, c);
        for (int r = 0; r < d; ++r) out.a[r][j] = img[r];
    }
    return out;
}

BasisReport check_basis(const PrincipalSeries& P, SubsetJ J)
{
    const InducedModule& M = P.module();
    const Chevalley& G = M.group();
    const RootSystem& R = G.roots();
    const EModule& E = P.e(J);
    const WeylElt wJ = R.longest(J);
    const std::uint64_t qt = G.field().level_size(M.level());

    BasisReport rep;
    rep.J = J;
    rep.dim_E = E.dim();
    Subspace img(E.dim(), M.F());
    for (auto w : R.z_set(J, P.i_theta())) {
        rep.z_set.push_back(R.name(w));
        const WeylElt y = R.multiply(wJ, R.inverse(w));
        std::uint64_t c = 1;
        for (int s = 0; s < R.length(y); ++s) c *= qt;
        rep.count_formula += c;
        for (const Mat& u : G.unipotents(R.phi_minus(y), M.level())) {
            const auto coords = E.E.project(M.act(G.mul(u, G.wdot(w)), E.eta));
            require(coords.has_value(), "basis: vector outside M_J");
            img.insert(*coords);
            ++rep.vectors;
        }
    }
    rep.rank = img.dim();
    rep.independent = rep.rank == rep.vectors;
    rep.spanning = rep.rank == rep.dim_E;
    return rep;
}

IntertwinerReport verify_intertwiner(const PrincipalSeries& P)
{
    const InducedModule& M = P.module();
    const Chevalley& G = M.group();
    const RootSystem& R = G.roots();
    const FieldTower& K = G.field();
    const PrimeField& F = M.F();
    IntertwinerReport rep;
    for (SubsetJ J : P.subsets()) {
        const Vec& eta = P.e(J).eta;
        const WeylElt wJ = R.longest(J);
        for (auto w : R.min_coset_reps(J)) {
            const Mat& wd = G.wdot(w);
            const Mat wd_inv = G.inverse(wd);
            const Vec weta = M.act(wd, eta);
            for (int i = 1; i <= R.rank(); ++i) {
                const Root ai = R.simple_root(i);
                if (R.apply(R.multiply(wJ, R.inverse(w)), ai).positive()) continue;
                const WeylElt sw = R.multiply(R.simple(i), w);
                const bool case_i = R.length(sw) < R.length(w);
                const bool case_ii = !case_i && R.length(R.multiply(sw, wJ)) < R.length(R.multiply(w, wJ));
                if (!case_i && !case_ii) continue;
                const Mat s = G.sdot(i);
                for (Elt x : K.level_members(M.level())) {
                    if (x == 0) continue;
                    IntertwinerCase c{J, i, w, x, case_i};
                    const Vec lhs = M.act(G.mul(G.mul(s, G.eps(ai, x)), wd), eta);
                    const Rank1Constants rc = G.rank1_constants(i, x);
                    const Vec fweta = M.act(G.eps(ai, rc.f), weta);
                    if (case_ii) {
                        c.equal = lhs == sub(F, fweta, weta);
                        ++rep.case_ii;
                        rep.case_ii_equal += c.equal;
                    } else {
                        const Mat t = G.mul(G.mul(s, G.coroot(i, rc.h)), s);
                        const Coef a = M.chars().eval(M.theta(), G.diagonal(G.mul(G.mul(wd, t), wd_inv)));
                        const Coef b = M.chars().eval(M.theta(), G.diagonal(G.mul(G.mul(wd_inv, t), wd)));
                        c.match_conjugate = lhs == scale(F, a, fweta);
                        c.match_inverse_conjugate = lhs == scale(F, b, fweta);
                        c.equal = c.match_conjugate || c.match_inverse_conjugate;
                        ++rep.case_i;
                        rep.case_i_conjugate += c.match_conjugate;
                        rep.case_i_inverse_conjugate += c.match_inverse_conjugate;
                    }
                    rep.cases.push_back(c);
                }
            }
        }
    }
    return rep;
}

Calibration calibrate(const std::vector<IntertwinerReport>& reports)
{
    Calibration c;
    for (const auto& r : reports) {
        c.case_i_total += r.case_i;
        c.conjugate_hits += r.case_i_conjugate;
        c.inverse_conjugate_hits += r.case_i_inverse_conjugate;
    }
    const bool conj = c.conjugate_hits == c.case_i_total;
    const bool inv = c.inverse_conjugate_hits == c.case_i_total;
    c.ambiguous = conj && inv;
    if (conj != inv) c.winner = conj ? TwistConvention::Conjugate : TwistConvention::InverseConjugate;
    return c;
}

std::string convention_name(TwistConvention c)
{
    return c == TwistConvention::Conjugate ? "theta(w t w^-1)" : "theta(w^-1 t w)";
}

Subspace bruhat_span_MJ(const PrincipalSeries& P, SubsetJ J)
{
    const InducedModule& M = P.module();
    const Chevalley& G = M.group();
    const RootSystem& R = G.roots();
    const WeylElt wJ = R.longest(J);
    const Vec& eta = P.e(J).eta;
    Subspace out(M.dim(), M.F());
    for (auto w : R.min_coset_reps(J)) {
        const Vec weta = M.act(G.wdot(w), eta);
        for (const Mat& u : G.unipotents(R.phi_minus(R.multiply(wJ, R.inverse(w))), M.level()))
            out.insert(M.act(u, weta));
    }
    return out;
}

SocleReport check_socle(const PrincipalSeries& P, SubsetJ J)
{
    const InducedModule& M = P.module();
    SocleReport rep;
    rep.J = J;
    rep.Jp = P.i_theta().minus(J);
    rep.dim_E = P.e(J).dim();
    const InducedModule nabla(M.chars_ptr(), M.theta(), M.level(), rep.Jp);
    rep.nabla_dim = nabla.dim();
    rep.spin_D = spin(nabla, {nabla.eta(J)}).space.dim();
    return rep;
}

SimplicityReport simplicity_probe(const PrincipalSeries& P, SubsetJ J, int trials, std::mt19937_64& rng)
{
    const EModule& E = P.e(J);
    const PrimeField& F = P.module().F();
    SimplicityReport rep;
    rep.J = J;
    if (E.dim() == 0) return rep;
    std::uniform_int_distribution<Coef> pick(0, F.modulus() - 1);
    for (int t = 0; t < trials; ++t) {
        Vec c(E.dim());
        do {
            for (auto& x : c) x = pick(rng);
        } while (is_zero(c));
        std::vector<Vec> seeds{E.E.lift(c)};
        for (const auto& row : E.N.rows()) seeds.push_back(row);
        ++rep.trials;
        rep.generating += spin(P.module(), seeds).space.dim() == E.MJ.space.dim();
    }
    return rep;
}

} // namespace pslab
