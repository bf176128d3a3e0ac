#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "pslab/chevalley.hpp"
#include "pslab/prime_field.hpp"

namespace pslab {

/// F_ell with ell = 1 mod (q^{N!} - 1), ell != p, and the embedding
/// iota : F_{q^{N!}}^* -> F_ell^*, generator(N) -> zeta.
struct CoeffField {
    PrimeField F;
    std::uint64_t modulus = 1;  // q^{N!} - 1
    Coef omega = 1;             // least primitive root mod ell
    Coef zeta = 1;              // omega^{(ell - 1) / modulus}
    std::vector<Coef> zeta_pow; // zeta^m, 0 <= m < modulus

    std::uint32_t ell() const { return F.modulus(); }
};

/// Least primitive root modulo a prime.
Coef least_primitive_root(std::uint32_t ell);

/// Default: least prime ell = 1 mod (q^{N!} - 1) with ell != p. An override
/// must satisfy the same conditions.
CoeffField make_coeff_field(const FieldTower& field, std::optional<std::uint32_t> ell_override = {});

/// theta(t) = prod_i iota(t_1 ... t_i)^{e_i}.
struct Character {
    std::vector<std::uint64_t> e;
    auto operator<=>(const Character&) const = default;
};

class CharacterTable {
public:
    CharacterTable(std::shared_ptr<const Chevalley> group, CoeffField coeffs);

    const Chevalley& group() const { return *group_; }
    std::shared_ptr<const Chevalley> group_ptr() const { return group_; }
    const CoeffField& coeffs() const { return coeffs_; }
    const PrimeField& F() const { return coeffs_.F; }

    /// Exponents reduced mod q^{N!} - 1; length must equal the rank.
    Character make(const std::vector<std::int64_t>& exponents) const;
    Character trivial() const;
    /// All characters of T_N, exponents in lexicographic order.
    std::vector<Character> all() const;

    Coef iota(Elt x) const;
    Coef eval(const Character& theta, const Torus& t) const;
    /// Character of B: diagonal part only. Rejects non upper triangular input.
    Coef eval_B(const Character& theta, const Mat& b) const;

    /// {i : theta trivial on the level-k rank-one torus T_i}.
    SubsetJ i_theta(const Character& theta, int k) const;
    SubsetJ i_theta(const Character& theta) const { return i_theta(theta, group_->field().max_level()); }
    /// i_theta(theta, k) == i_theta(theta, N) for every k.
    bool level_consistent(const Character& theta) const;

    /// theta extended to P_{J'} (trivial on its unipotent radical), read off
    /// the torus part of the Bruhat form.
    Coef eval_parabolic(const Character& theta, SubsetJ Jp, const Mat& p) const;

    /// (eval(theta, z))_z over Z(G_N) in canonical order.
    std::vector<Coef> central_key(const Character& theta) const;

private:
    std::shared_ptr<const Chevalley> group_;
    CoeffField coeffs_;
};

struct BlockParam {
    Character theta;
    SubsetJ J;
};

/// Parameters grouped by central key; blocks are ordered by key.
std::map<std::vector<Coef>, std::vector<BlockParam>> blocks(const CharacterTable& table,
                                                           const std::vector<BlockParam>& params);

} // namespace pslab
