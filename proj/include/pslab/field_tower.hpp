#pragma once

#include <cstdint>
#include <vector>

namespace pslab {

/// Field element code: the base-p digits of the code are the polynomial
/// coefficients (constant term = least significant digit) modulo the tower's
/// irreducible polynomial. Codes are canonical, so equality is code equality.
using Elt = std::uint32_t;

struct TowerConfig {
    std::uint32_t p = 2;
    std::uint32_t a = 1;  // q = p^a
    int N = 1;            // top level; ambient field is F_{q^{N!}}
    int degree = 1;       // d = a * N!
    std::uint64_t q = 2;
    std::uint64_t size = 2;  // p^d
};

inline constexpr std::uint64_t kFieldBudget = std::uint64_t{1} << 24;

/// The ambient field F_{q^{N!}} together with its Frobenius levels
/// F_{q^{k!}}, k = 1..N, realised as fixed-point subfields.
///
/// Multiplication and addition go through log/antilog and Zech tables, so
/// every operation is O(1). The object is immutable after build().
class FieldTower {
public:
    /// Throws PreconditionError for a non-prime p or N outside 1..3 and
    /// BudgetExceeded when p^{a N!} > 2^24.
    static FieldTower build(std::uint32_t p, std::uint32_t a, int N);

    const TowerConfig& config() const { return cfg_; }
    std::uint32_t characteristic() const { return cfg_.p; }
    std::uint64_t q() const { return cfg_.q; }
    int max_level() const { return cfg_.N; }
    std::uint64_t size() const { return cfg_.size; }
    /// q^{k!}
    std::uint64_t level_size(int k) const;

    /// Monic modulus, coefficients low to high (length d + 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::vector<std::uint32_t> coefficients(Elt x) const;

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    Elt minus_one() const { return neg(1); }
    /// Image of an integer under Z -> F_p.
    Elt from_int(std::int64_t v) const;

    Elt add(Elt x, Elt y) const;
    Elt sub(Elt x, Elt y) const { return add(x, neg(y)); }
    Elt neg(Elt x) const;
    Elt mul(Elt x, Elt y) const;
    Elt inv(Elt x) const;
    Elt div(Elt x, Elt y) const { return mul(x, inv(y)); }
    Elt pow(Elt x, std::int64_t e) const;

    /// x^{q^j}
    Elt frobenius(Elt x, std::int64_t j) const;

    /// {x : x^{q^{k!}} = x}, ordered 0 first and then by dlog(., k).
    const std::vector<Elt>& level_members(int k) const;
    /// Least k with x in level k.
    int level_of(Elt x) const { return level_of_[x]; }
    bool in_level(Elt x, int k) const { return level_of_[x] <= k; }
    /// Position of x in level_members(k); x must lie in level k.
    std::uint64_t level_index(Elt x, int k) const;

    /// Least code of multiplicative order q^{k!} - 1 inside level k.
    Elt generator(int k) const;
    /// m with generator(k)^m = x, 0 <= m < q^{k!} - 1. Rejects x = 0 and
    /// x outside level k.
    std::uint64_t dlog(Elt x, int k) const;
    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Elt x) const;

    /// An F_p-basis of level k, chosen greedily along level_members(k).
    std::vector<Elt> level_basis(int k) const;

private:
    struct Level {
        std::uint64_t size = 0;
        std::uint64_t stride = 0;   // (Q - 1) / (Q_k - 1)
        std::uint64_t gen_inv = 0;  // inverse of the generator's reduced log mod Q_k - 1
        Elt generator = 0;
        std::vector<Elt> members;
    };

    TowerConfig cfg_;
    std::vector<std::uint32_t> modulus_;
    std::uint64_t group_order_ = 1;  // Q - 1
    std::vector<std::uint32_t> log_;
    std::vector<Elt> exp_;
    std::vector<std::uint32_t> zech_;  // log(1 + g^k), kNoLog when 1 + g^k = 0
    std::vector<std::uint8_t> level_of_;
    std::vector<Level> levels_;  // index k - 1

    static constexpr std::uint32_t kNoLog = 0xffffffffu;
};

} // namespace pslab
