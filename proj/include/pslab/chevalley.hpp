#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "pslab/field_tower.hpp"
#include "pslab/rootdata.hpp"

namespace pslab {

/// Square matrix of size n <= 4 over the ambient field, row-major with a
/// fixed stride of 4. Unused slots stay zero so defaulted equality is exact.
struct Mat {
    int n = 2;
    std::array<Elt, 16> e{};

    Elt& operator()(int r, int c) { return e[r * 4 + c]; }
    Elt operator()(int r, int c) const { return e[r * 4 + c]; }
    bool operator==(const Mat&) const = default;
    auto operator<=>(const Mat&) const = default;
};

/// Diagonal entries of a torus element.
using Torus = std::array<Elt, 4>;

/// g = u * wdot(w) * diag(t) * v with u in U_{w^{-1}} and v in U.
struct BruhatForm {
    Mat u;
    WeylElt w;
    Torus t{};
    Mat v;
};

/// Parameters of  sdot(i) eps_i(x) sdot(i)^{-1} = eps_i(f) sdot(i) coroot(i, h) eps_i(g).
struct Rank1Constants {
    Elt f = 0;
    Elt h = 0;
    Elt g = 0;
};

enum class SubgroupKind { U, T, B, G, U_w, U_prime_w, P_J };

inline constexpr std::uint64_t kGroupBudget = 1'000'000;

/// SL_{r+1} over the field tower: root subgroups, Weyl representatives,
/// Bruhat normal form and exhaustive enumeration of the level-k subgroups.
class Chevalley {
public:
    Chevalley(std::shared_ptr<const FieldTower> field, std::shared_ptr<const RootSystem> roots);

    const FieldTower& field() const { return *field_; }
    const RootSystem& roots() const { return *roots_; }
    std::shared_ptr<const FieldTower> field_ptr() const { return field_; }
    std::shared_ptr<const RootSystem> roots_ptr() const { return roots_; }
    int n() const { return n_; }

    Mat identity() const;
    Mat mul(const Mat& a, const Mat& b) const;
    Mat mul(std::initializer_list<const Mat*> factors) const;
    Mat inverse(const Mat& a) const;
    Elt det(const Mat& a) const;
    Mat scalar(Elt z) const;
    Mat diag(const Torus& t) const;
    Torus diagonal(const Mat& a) const;

    Mat eps(Root alpha, Elt c) const;
    Mat coroot(int i, Elt t) const;
    Mat sdot(int i) const;
    /// Product of sdot along the canonical reduced word.
    const Mat& wdot(WeylElt w) const { return wdot_[w.id]; }
    /// Product of sdot along the least reduced word with letters in J.
    Mat wdot_in(SubsetJ J, WeylElt w) const;
    Mat word_product(const Word& word) const;

    BruhatForm bruhat_form(const Mat& g) const;
    Mat reassemble(const BruhatForm& b) const;
    Rank1Constants rank1_constants(int i, Elt x) const;

    bool is_unitriangular(const Mat& a) const;
    bool is_upper_triangular(const Mat& a) const;
    bool is_scalar(const Mat& a) const;
    bool in_level(const Mat& a, int k) const;
    /// Unitriangular with off-diagonal support inside `support`.
    bool supported_on(const Mat& a, const std::vector<Root>& support) const;
    bool in_U_w(const Mat& a, WeylElt w) const { return supported_on(a, roots_->phi_minus(w)); }

    /// Unitriangular matrix with the given entries on `support` (same order).
    Mat unipotent(const std::vector<Root>& support, const std::vector<Elt>& entries) const;
    /// All unitriangular matrices supported on `support` with level-k entries,
    /// in mixed-radix order (first root most significant, entries by dlog).
    std::vector<Mat> unipotents(const std::vector<Root>& support, int k) const;
    std::vector<Torus> torus(int k) const;

    std::uint64_t order(SubgroupKind kind, int k, WeylElt w = {}, SubsetJ J = {}) const;
    /// Exhaustive canonical enumeration; BudgetExceeded above 10^6 elements.
    std::vector<Mat> enumerate(SubgroupKind kind, int k, WeylElt w = {}, SubsetJ J = {}) const;
    /// Scalars zeta * id with zeta^{r+1} = 1, zeta in level k, in dlog order.
    std::vector<Mat> center(int k) const;

    /// eps(+-alpha_i, b) for b in an F_p-basis of level k, plus coroot(i, generator(k)).
    std::vector<Mat> generators(int k) const;
    /// eps(alpha, b) for alpha in `support`, b in an F_p-basis of level k.
    std::vector<Mat> unipotent_generators(const std::vector<Root>& support, int k) const;

    /// Uniform random element of G_k.
    Mat random_element(int k, std::mt19937_64& rng) const;
    Torus random_torus(int k, std::mt19937_64& rng) const;
    Mat random_unipotent(const std::vector<Root>& support, int k, std::mt19937_64& rng) const;

private:
    std::shared_ptr<const FieldTower> field_;
    std::shared_ptr<const RootSystem> roots_;
    int n_;
    std::vector<Mat> wdot_;
};

} // namespace pslab
