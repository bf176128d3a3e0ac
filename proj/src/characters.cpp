#include "pslab/characters.hpp"

#include "pslab/errors.hpp"

namespace pslab {

Coef least_primitive_root(std::uint32_t ell)
{
    require(is_prime(ell), "least_primitive_root: modulus must be prime");
    if (ell == 2) return 1;
    const auto factors = prime_factors(ell - 1);
    for (std::uint64_t g = 2; g < ell; ++g) {
        bool primitive = true;
        for (auto f : factors) primitive = primitive && powmod_u64(g, (ell - 1) / f, ell) != 1;
        if (primitive) return static_cast<Coef>(g);
    }
    throw PreconditionError("least_primitive_root: none found");
}

CoeffField make_coeff_field(const FieldTower& field, std::optional<std::uint32_t> ell_override)
{
    const std::uint64_t m = field.size() - 1;
    const std::uint64_t p = field.characteristic();
    std::uint64_t ell = 0;
    if (ell_override) {
        ell = *ell_override;
        require(is_prime(ell), "ell must be prime");
        require(ell % m == 1 % m, "ell must be 1 modulo q^{N!} - 1");
        require(ell != p, "ell must differ from the characteristic");
    } else {
        for (std::uint64_t c = m + 1; c < (std::uint64_t{1} << 31); c += m) {
            if (c != p && is_prime(c)) {
                ell = c;
                break;
            }
        }
        require(ell != 0, "make_coeff_field: no prime below 2^31");
    }
    CoeffField K;
    K.F = PrimeField(static_cast<std::uint32_t>(ell));
    K.modulus = m;
    K.omega = least_primitive_root(static_cast<std::uint32_t>(ell));
    K.zeta = K.F.pow(K.omega, (ell - 1) / m);
    K.zeta_pow.resize(m);
    Coef z = 1;
    for (std::uint64_t k = 0; k < m; ++k) {
        K.zeta_pow[k] = z;
        z = K.F.mul(z, K.zeta);
    }
    return K;
}

CharacterTable::CharacterTable(std::shared_ptr<const Chevalley> group, CoeffField coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs))
{
    require(coeffs_.modulus == group_->field().size() - 1, "CharacterTable: coefficient field does not match tower");
}

Character CharacterTable::make(const std::vector<std::int64_t>& exponents) const
{
    const int r = group_->roots().rank();
    require(static_cast<int>(exponents.size()) == r, "character: expected " + std::to_string(r) + " exponents");
    const auto m = static_cast<std::int64_t>(coeffs_.modulus);
    Character out;
    for (auto e : exponents) out.e.push_back(static_cast<std::uint64_t>(((e % m) + m) % m));
    return out;
}

Character CharacterTable::trivial() const
{
    return Character{std::vector<std::uint64_t>(group_->roots().rank(), 0)};
}

std::vector<Character> CharacterTable::all() const
{
    const int r = group_->roots().rank();
    const std::uint64_t m = coeffs_.modulus;
    std::vector<Character> out;
    Character cur = trivial();
    while (true) {
        out.push_back(cur);
        int s = r - 1;
        while (s >= 0 && ++cur.e[s] == m) cur.e[s--] = 0;
        if (s < 0) break;
    }
    return out;
}

Coef CharacterTable::iota(Elt x) const
{
    return coeffs_.zeta_pow[group_->field().dlog(x, group_->field().max_level())];
}

Coef CharacterTable::eval(const Character& theta, const Torus& t) const
{
    const FieldTower& K = group_->field();
    const std::uint64_t m = coeffs_.modulus;
    const int N = K.max_level();
    Elt d = 1;
    std::uint64_t exponent = 0;
    for (std::size_t i = 0; i < theta.e.size(); ++i) {
        d = K.mul(d, t[i]);
        const auto L = static_cast<unsigned __int128>(K.dlog(d, N));
        exponent = static_cast<std::uint64_t>((exponent + L * theta.e[i]) % m);
    }
    return coeffs_.zeta_pow[exponent];
}

Coef CharacterTable::eval_B(const Character& theta, const Mat& b) const
{
    require(group_->is_upper_triangular(b), "eval_B: element is not in B");
    return eval(theta, group_->diagonal(b));
}

SubsetJ CharacterTable::i_theta(const Character& theta, int k) const
{
    const std::uint64_t mk = group_->field().level_size(k) - 1;
    SubsetJ out;
    for (std::size_t i = 0; i < theta.e.size(); ++i)
        if (theta.e[i] % mk == 0) out.mask |= 1u << i;
    return out;
}

bool CharacterTable::level_consistent(const Character& theta) const
{
    const SubsetJ top = i_theta(theta);
    for (int k = 1; k < group_->field().max_level(); ++k)
        if (i_theta(theta, k) != top) return false;
    return true;
}

Coef CharacterTable::eval_parabolic(const Character& theta, SubsetJ Jp, const Mat& p) const
{
    require(Jp.subset_of(i_theta(theta)), "eval_parabolic: J' must lie inside I(theta)");
    const BruhatForm b = group_->bruhat_form(p);
    require(group_->roots().in_parabolic(b.w, Jp), "eval_parabolic: element is not in P_{J'}");
    return eval(theta, b.t);
}

std::vector<Coef> CharacterTable::central_key(const Character& theta) const
{
    std::vector<Coef> out;
    for (const Mat& z : group_->center(group_->field().max_level())) out.push_back(eval(theta, group_->diagonal(z)));
    return out;
}

std::map<std::vector<Coef>, std::vector<BlockParam>> blocks(const CharacterTable& table,
                                                           const std::vector<BlockParam>& params)
{
    std::map<std::vector<Coef>, std::vector<BlockParam>> out;
    for (const auto& bp : params) {
        require(bp.J.subset_of(table.i_theta(bp.theta)), "blocks: J must lie inside I(theta)");
        out[table.central_key(bp.theta)].push_back(bp);
    }
    return out;
}

} // namespace pslab
