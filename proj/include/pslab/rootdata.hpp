#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pslab {

/// Subset of the simple-root index set I = {1..r}, bit i-1 for index i.
struct SubsetJ {
    std::uint32_t mask = 0;

    static SubsetJ of(std::initializer_list<int> indices)
    {
        SubsetJ s;
        for (int i : indices) s.mask |= 1u << (i - 1);
        return s;
    }
    static SubsetJ full(int r) { return SubsetJ{(1u << r) - 1}; }

    bool contains(int i) const { return (mask >> (i - 1)) & 1u; }
    bool subset_of(SubsetJ other) const { return (mask & ~other.mask) == 0; }
    bool empty() const { return mask == 0; }
    int size() const { return __builtin_popcount(mask); }
    std::vector<int> indices() const;

    SubsetJ operator|(SubsetJ o) const { return {mask | o.mask}; }
    SubsetJ operator&(SubsetJ o) const { return {mask & o.mask}; }
    SubsetJ minus(SubsetJ o) const { return {mask & ~o.mask}; }
    auto operator<=>(const SubsetJ&) const = default;
};

/// All subsets of `s`, in increasing mask order.
std::vector<SubsetJ> subsets_of(SubsetJ s);

/// A root e_i - e_j of type A_r, coordinates 0-based in 0..r. Positive iff i < j.
struct Root {
    int i = 0;
    int j = 1;

    bool positive() const { return i < j; }
    int height() const { return j - i; }
    Root negated() const { return {j, i}; }
    auto operator<=>(const Root&) const = default;
};

/// Index of a Weyl group element inside its RootSystem's canonical list.
struct WeylElt {
    int id = 0;
    auto operator<=>(const WeylElt&) const = default;
};

using Permutation = std::array<std::uint8_t, 4>;
using Word = std::vector<int>;  // letters are simple indices 1..r

/// Root system of type A_r (1 <= r <= 3) with its fully enumerated Weyl group
/// S_{r+1}. Elements are listed by length, then by canonical word; the
/// canonical word is the lexicographically least reduced word.
class RootSystem {
public:
    static RootSystem build_A(int r);

    int rank() const { return r_; }
    int matrix_size() const { return r_ + 1; }
    /// n = |Phi^+|
    int num_positive() const { return static_cast<int>(positive_.size()); }
    /// Phi^+ ordered by height, then by start index.
    const std::vector<Root>& positive_roots() const { return positive_; }
    /// Coordinates of a root in the simple-root basis.
    std::vector<int> simple_coordinates(Root a) const;
    int positive_index(Root a) const;
    Root simple_root(int i) const { return {i - 1, i}; }

    std::size_t order() const { return perms_.size(); }
    std::vector<WeylElt> elements() const;
    WeylElt identity() const { return {0}; }
    WeylElt longest() const { return longest_; }
    WeylElt simple(int i) const { return simple_[i - 1]; }

    const Permutation& permutation(WeylElt w) const { return perms_[w.id]; }
    const Word& word(WeylElt w) const { return words_[w.id]; }
    int length(WeylElt w) const { return lengths_[w.id]; }
    WeylElt multiply(WeylElt x, WeylElt y) const { return {mult_[x.id * order() + y.id]}; }
    WeylElt inverse(WeylElt w) const { return {inverse_[w.id]}; }
    WeylElt from_word(const Word& word) const;
    WeylElt from_permutation(const Permutation& p) const;
    Root apply(WeylElt w, Root a) const;
    std::string name(WeylElt w) const;

    /// Phi_w^- = {a in Phi^+ : w(a) < 0}, canonical order.
    std::vector<Root> phi_minus(WeylElt w) const;
    /// Phi_w^+ = {a in Phi^+ : w(a) > 0}, canonical order.
    std::vector<Root> phi_plus(WeylElt w) const;
    /// Right descents {i : l(w s_i) < l(w)}.
    SubsetJ descents(WeylElt w) const;
    SubsetJ left_descents(WeylElt w) const;
    /// Subword criterion on the canonical reduced word of y.
    bool bruhat_leq(WeylElt x, WeylElt y) const;

    /// W_J in canonical order.
    std::vector<WeylElt> parabolic(SubsetJ J) const;
    bool in_parabolic(WeylElt w, SubsetJ J) const;
    /// W^J = {x : l(x s_j) > l(x) for all j in J}.
    std::vector<WeylElt> min_coset_reps(SubsetJ J) const;
    /// Longest element w_J of W_J.
    WeylElt longest(SubsetJ J) const;
    /// Lexicographically least reduced word of w using only letters in J.
    Word word_in(SubsetJ J, WeylElt w) const;
    /// Z_J = {w in W^J : R(w w_J) subset of J u (I \ Itheta)}.
    std::vector<WeylElt> z_set(SubsetJ J, SubsetJ Itheta) const;

    SubsetJ all() const { return SubsetJ::full(r_); }

private:
    int r_ = 1;
    std::vector<Root> positive_;
    std::vector<Permutation> perms_;
    std::vector<Word> words_;
    std::vector<int> lengths_;
    std::vector<int> mult_;
    std::vector<int> inverse_;
    std::vector<WeylElt> simple_;
    WeylElt longest_;
};

} // namespace pslab
