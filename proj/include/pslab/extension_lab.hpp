#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pslab/principal_modules.hpp"

namespace pslab {

struct ExtParams {
    Character lambda;
    SubsetJ J;
    Character mu;
    SubsetJ K;
    int i = 1;
};

/// Levels i and i+1 of E(lambda)_J and E(mu)_K plus the data shared by the
/// census loops. Immutable after construction.
class ExtContext {
public:
    ExtContext(std::shared_ptr<const CharacterTable> chars, ExtParams params);

    const ExtParams& params() const { return params_; }
    const CharacterTable& chars() const { return *chars_; }
    const Chevalley& group() const { return chars_->group(); }
    const PrimeField& F() const { return chars_->F(); }
    int level() const { return params_.i; }
    SubsetJ Jp() const { return Jp_; }
    /// q^{(i+1)!}
    std::uint64_t qt() const { return group().field().level_size(params_.i + 1); }

    const PrincipalSeries& lambda_at(int level) const { return level == params_.i ? *lam_i_ : *lam_next_; }
    const PrincipalSeries& mu_at(int level) const { return level == params_.i ? *mu_i_ : *mu_next_; }
    const EModule& E_lambda(int level) const { return lambda_at(level).e(params_.J); }
    const EModule& E_mu(int level) const { return mu_at(level).e(params_.K); }

    /// U_{i+1} in canonical order and the index of an element.
    const std::vector<Mat>& U_next() const { return U_next_; }
    int u_index(const Mat& u) const;
    /// Index inside U_{i+1} of an element of U_i.
    bool in_U_i(std::size_t idx) const { return in_U_i_[idx] != 0; }

    /// E_{i+1}(mu)_K coordinates of g * eta(mu)_K.
    Vec image_eta_mu(const Mat& g) const;
    /// S = span{ x wdot(w0) C(mu)_K : x in U_{i+1} } in E_{i+1}(mu)_K.
    const Subspace& target() const { return S_; }

    /// P_{J',i} with lambda(p)^{-1} and the action of p on M_{i+1}(mu).
    const std::vector<Mat>& parabolic() const { return P_; }
    const std::vector<Coef>& parabolic_weight() const { return P_weight_; }
    const std::vector<Action>& parabolic_action() const { return P_action_; }
    /// (sign, action) for wdot_in(J, y), y in W_J.
    const std::vector<std::pair<Coef, Action>>& alternating() const { return alt_; }

    /// Non-central elements of G_i with their Bruhat cells.
    const std::vector<Mat>& G_noncentral() const { return G_nc_; }
    const std::vector<WeylElt>& G_noncentral_cell() const { return G_nc_cell_; }

private:
    std::shared_ptr<const CharacterTable> chars_;
    ExtParams params_;
    SubsetJ Jp_;
    std::shared_ptr<PrincipalSeries> lam_i_, lam_next_, mu_i_, mu_next_;
    std::vector<Mat> U_next_;
    std::vector<std::uint8_t> in_U_i_;
    Subspace S_;
    std::vector<Mat> P_;
    std::vector<Coef> P_weight_;
    std::vector<Action> P_action_;
    std::vector<std::pair<Coef, Action>> alt_;
    std::vector<Mat> G_nc_;
    std::vector<WeylElt> G_nc_cell_;
};

struct OmegaRow {
    WeylElt w;
    std::string name;
    int length = 0;
    std::uint64_t omega = 0;
    std::uint64_t omega_prime = 0;
    double bound = 0;         // (3 q~)^{l(w) - 1}
    bool bound_ok = false;    // |Omega'_w| <= bound
    bool factor_ok = false;   // |Omega_w| = q~^{n-l}(q~^l - |Omega'_w|)
    bool lower_ok = false;    // |Omega_w| >= q~^{n-1}(q~ - 3^{l-1})
};

struct OmegaCensus {
    std::vector<OmegaRow> rows;
    /// member[w.id][x] = x in Omega_w
    std::vector<std::vector<std::uint8_t>> member;
    std::vector<std::uint8_t> in_omega;  // Omega
    std::uint64_t omega_size = 0;
    std::uint64_t omega_meets_U_i = 0;
    std::uint64_t P_value_times3 = 0;  // 3 * sum_w 3^{l(w)-1}
};

/// Omega_w for every w, then Omega from the H-sets.
OmegaCensus omega_census(const ExtContext& ctx, int threads);

/// H_u as sorted indices into U_{i+1}.
std::vector<int> h_set(const ExtContext& ctx, std::size_t u);

struct HReport {
    std::uint64_t classes = 0;
    std::uint64_t class_lower_bound = 0;  // ceil(q~^n / (|U_i| |T_i|))
    bool partition = false;
    bool contains_self = false;
};

HReport h_partition(const ExtContext& ctx, int threads);

struct GammaReport {
    std::vector<std::uint8_t> in_gamma;                // over U_{i+1}, only for u in Omega
    std::vector<std::uint64_t> cell_counts;            // |Gamma_w| by w.id
    std::uint64_t gamma_size = 0;
    std::uint64_t omega_minus_gamma = 0;
    bool gamma_e_empty = false;
};

GammaReport gamma_set(const ExtContext& ctx, const OmegaCensus& census, int threads);

/// No g in G_i \ Z(G_i), w in W with g u wdot(w) in u wdot(w0) B_{i+1}.
bool claim_club(const ExtContext& ctx, const Mat& u);

struct XiResult {
    Vec xi_M;    // representative in M_{i+1}(mu)
    Vec xi;      // E_{i+1}(mu)_K coordinates
    bool nonzero = false;
    bool eigen_ok = false;  // x eta_i = lambda(x) eta_i on P_{J',i}
};

XiResult xi(const ExtContext& ctx, const Mat& u);

struct ClubRow {
    std::uint8_t club = 0;
    std::uint8_t xi_nonzero = 0;
    std::uint8_t eigen_ok = 0;
};

struct ClubCensus {
    std::vector<ClubRow> rows;
    std::uint64_t club_true = 0;
    std::uint64_t xi_nonzero = 0;
    std::vector<int> counterexamples;  // club true but xi = 0
    bool eigen_ok = false;
};

ClubCensus club_census(const ExtContext& ctx, int threads);

struct PhiMap {
    bool well_defined = false;
    Matrix phi;  // E_{i+1}(mu)_K x E_i(lambda)_J
    int rank = 0;
    int kernel_dim = 0;
    int checks = 0;
    int failures = 0;  // equivariance failures over generators x basis
};

PhiMap phi_map(const ExtContext& ctx, const XiResult& x);

/// Matrix of the level inclusion E_i -> E_{i+1} (lambda or mu side).
Matrix level_inclusion(const PrincipalSeries& lower, const PrincipalSeries& upper, SubsetJ J);

struct ProbeReport {
    int u = -1;
    bool xi_nonzero = false;
    bool phi_well_defined = false;
    int phi_rank = 0;
    int phi_kernel = 0;
    int equivariance_failures = 0;
    bool inclusions_injective = false;
    int dim_Mi = 0;
    int dim_Mnext = 0;
    int dim_fixed = 0;
    int dim_image_fixed = 0;
    int dim_image_fixed_lambda = 0;  // lambda-part of f_i(M_i) meeting the fixed space
    bool non_split_signal = false;   // f_i(M_i) meets the fixed space only inside f_i(E_i(mu)_K)
    Matrix f;                        // f_i as a matrix M_i -> M_{i+1}
};

ProbeReport twisted_probe(const ExtContext& ctx, int u);

/// First u in Omega \ Gamma with claim_club and xi nonzero, else first u
/// with xi nonzero, else -1.
int choose_u(const ExtContext& ctx, int threads);

struct CompositionReport {
    bool product_matches = false;    // f_2 f_1 against the expanded two-step formula
    bool inclusion_transitive = false;
    bool equivariant = false;        // f_{1,3} commutes with G_1 generators
    bool injective = false;
};

CompositionReport check_composition(const ExtContext& first, int u1, const ExtContext& second, int u2);

/// A module 0 -> E(mu)_K -> M -> E(lambda)_J -> 0 given by matrices on
/// generators and on the central element c0; coordinates are (lambda part, mu part).
struct SynthExtension {
    int d_lambda = 0;
    int d_mu = 0;
    std::vector<Matrix> gens;
    Matrix c0;
};

struct SplitReport {
    Coef a = 0;
    Coef b = 0;
    int eigen_dim = 0;
    bool complement = false;   // eigenspace + sub = M, meeting in 0
    bool stable = false;       // eigenspace stable under generators
    bool v0_in_eigen = false;  // v0 = xi + (a - b)^{-1} m0 lies in the eigenspace
    bool pass() const { return complement && stable && v0_in_eigen; }
};

SplitReport central_split(const PrimeField& F, const SynthExtension& M, Coef a, Coef b);

/// Least z in Z(G_N) inside G_k with lambda(z) != mu(z).
std::optional<Mat> choose_c0(const CharacterTable& chars, const Character& lambda, const Character& mu, int k);

/// Block-diagonal module conjugated by a random invertible matrix that preserves
/// the sub E(mu)_K; twist = false keeps the identity gluing.
SynthExtension synthesize_extension(const PrincipalSeries& lam, SubsetJ J, const PrincipalSeries& mu, SubsetJ K,
                                    const Mat& c0, bool twist, std::mt19937_64& rng);

} // namespace pslab
