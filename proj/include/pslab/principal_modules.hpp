#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pslab/characters.hpp"
#include "pslab/linalg.hpp"

namespace pslab {

inline constexpr std::uint64_t kModuleBudget = 100'000;

/// Coset representative u * wdot(w) of G_k / P_{J',k}, u in U_{w^{-1},k}.
struct BasisKey {
    WeylElt w;
    Mat u;
};

/// Permutation-with-scalars matrix of one group element on the basis.
struct Action {
    std::vector<int> target;
    std::vector<Coef> scalar;
};

/// k G_k (x)_{k P_{J',k}} theta at level k. J' = {} gives M_k(theta).
class InducedModule {
public:
    InducedModule(std::shared_ptr<const CharacterTable> chars, Character theta, int k, SubsetJ Jp = {});

    const CharacterTable& chars() const { return *chars_; }
    std::shared_ptr<const CharacterTable> chars_ptr() const { return chars_; }
    const Chevalley& group() const { return chars_->group(); }
    const PrimeField& F() const { return chars_->F(); }
    const Character& theta() const { return theta_; }
    int level() const { return k_; }
    SubsetJ parabolic() const { return Jp_; }

    int dim() const { return static_cast<int>(keys_.size()); }
    const std::vector<BasisKey>& keys() const { return keys_; }
    /// Basis index of u * wdot(w); -1 when (w, u) is not a basis key at this level.
    int index_of(WeylElt w, const Mat& u) const;
    /// Canonical label: word of w and level indices of the entries of u.
    std::string label(int idx) const;

    Vec zero() const { return Vec(dim(), 0); }
    Vec unit(int idx) const;
    /// The generator 1_theta (key (e, id)).
    Vec base() const { return unit(0); }

    /// g * basis[idx] = scalar * basis[target].
    std::pair<int, Coef> act_basis(const Mat& g, int idx) const;
    Vec act(const Mat& g, const Vec& v) const;
    Action action_of(const Mat& g) const;
    Vec apply(const Action& a, const Vec& v) const;

    /// Generators of G_k and their precomputed actions.
    const std::vector<Mat>& generators() const { return gens_; }
    const std::vector<Action>& generator_actions() const { return gen_actions_; }

    /// sum_{w in W_J} (-1)^{l(w)} wdot_in(J, w) * 1_theta; J inside I(theta), disjoint from J'.
    Vec eta(SubsetJ J) const;

private:
    std::shared_ptr<const CharacterTable> chars_;
    Character theta_;
    int k_;
    SubsetJ Jp_;
    std::vector<BasisKey> keys_;
    std::vector<int> offset_;  // by WeylElt id, -1 outside W^{J'}
    std::vector<Mat> gens_;
    std::vector<Action> gen_actions_;
};

/// Closure of the seed span under the generators. raw[j] = word_j applied to
/// seeds[seed_of[j]] (letters applied left to right); rows of `space` are
/// spanned by raw.
struct SpinResult {
    Subspace space;
    std::vector<Vec> raw;
    std::vector<std::vector<int>> words;
    std::vector<int> seed_of;
};

SpinResult spin(const InducedModule& M, const std::vector<Vec>& seeds);

/// top / sub with sub inside top. Coordinates are with respect to a fixed
/// echelon complement of sub in top.
class Quotient {
public:
    Quotient() = default;
    Quotient(Subspace top, Subspace sub);

    int dim() const { return complement_.dim(); }
    const Subspace& top() const { return top_; }
    const Subspace& sub() const { return sub_; }
    /// Quotient coordinates of v; nothing when v is outside top.
    std::optional<Vec> project(const Vec& v) const;
    Vec lift(const Vec& coords) const;

private:
    Subspace top_;
    Subspace sub_;
    Subspace complement_;
};

/// E(theta)_J = M(theta)_J / N(theta)_J at level k.
struct EModule {
    SubsetJ J;
    Vec eta;
    SpinResult MJ;
    Subspace N;
    Quotient E;
    Vec C;  // image of eta
    bool n_inside_m = false;
    int dim() const { return E.dim(); }
};

/// M(theta) at level k with every M_J and E_J, J inside I(theta).
class PrincipalSeries {
public:
    PrincipalSeries(std::shared_ptr<const CharacterTable> chars, Character theta, int k);

    const InducedModule& module() const { return *M_; }
    std::shared_ptr<const InducedModule> module_ptr() const { return M_; }
    SubsetJ i_theta() const { return itheta_; }
    const EModule& e(SubsetJ J) const;
    std::vector<SubsetJ> subsets() const { return subsets_of(itheta_); }

    /// Quotient coordinates of g * lift(c) in E_J.
    Vec act_E(SubsetJ J, const Mat& g, const Vec& c) const;
    /// Matrix of g on E_J (columns are images of basis vectors).
    Matrix matrix_E(SubsetJ J, const Mat& g) const;

private:
    std::shared_ptr<const InducedModule> M_;
    SubsetJ itheta_;
    std::map<SubsetJ, EModule> e_;
};

struct BasisReport {
    SubsetJ J;
    std::vector<std::string> z_set;
    int vectors = 0;
    int rank = 0;
    int dim_E = 0;
    std::uint64_t count_formula = 0;
    bool independent = false;
    bool spanning = false;
    bool pass() const { return independent && spanning && count_formula == static_cast<std::uint64_t>(dim_E); }
};

BasisReport check_basis(const PrincipalSeries& P, SubsetJ J);

enum class TwistConvention { Conjugate, InverseConjugate };  // theta(w t w^-1), theta(w^-1 t w)

struct IntertwinerCase {
    SubsetJ J;
    int i = 1;
    WeylElt w;
    Elt x = 0;
    bool case_i = false;
    bool equal = false;                 // case (ii), or case (i) under the calibrated convention
    bool match_conjugate = false;       // case (i) only
    bool match_inverse_conjugate = false;
};

struct IntertwinerReport {
    std::vector<IntertwinerCase> cases;
    int case_i = 0;
    int case_ii = 0;
    int case_i_conjugate = 0;
    int case_i_inverse_conjugate = 0;
    int case_ii_equal = 0;
};

/// Every applicable (J, i, w, x) at the module's level.
IntertwinerReport verify_intertwiner(const PrincipalSeries& P);

struct Calibration {
    std::optional<TwistConvention> winner;
    bool ambiguous = false;  // both conventions matched everywhere
    int case_i_total = 0;
    int conjugate_hits = 0;
    int inverse_conjugate_hits = 0;
};

Calibration calibrate(const std::vector<IntertwinerReport>& reports);
std::string convention_name(TwistConvention c);

/// M(theta)_J recomputed as span of U_{w_J w^{-1}} wdot(w) eta_J, w in W^J.
Subspace bruhat_span_MJ(const PrincipalSeries& P, SubsetJ J);

struct SocleReport {
    SubsetJ J;
    SubsetJ Jp;
    int nabla_dim = 0;
    int spin_D = 0;
    int dim_E = 0;
    bool pass() const { return spin_D == dim_E; }
};

SocleReport check_socle(const PrincipalSeries& P, SubsetJ J);

struct SimplicityReport {
    SubsetJ J;
    int trials = 0;
    int generating = 0;
};

/// Random nonzero classes of E_J that regenerate M_J together with N_J.
SimplicityReport simplicity_probe(const PrincipalSeries& P, SubsetJ J, int trials, std::mt19937_64& rng);

} // namespace pslab
