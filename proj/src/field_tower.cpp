#include "pslab/field_tower.hpp"

#include <algorithm>

#include "pslab/errors.hpp"
#include "pslab/prime_field.hpp"

namespace pslab {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low to high

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Polynomial arithmetic over F_p, only used while the tables are built.
struct PolyArith {
    std::uint32_t p;

    std::uint32_t inv(std::uint32_t a) const
    {
        return static_cast<std::uint32_t>(powmod_u64(a, p - 2, p));
    }

    Poly mod(Poly a, const Poly& f) const
    {
        trim(a);
        const std::size_t df = f.size() - 1;
        const std::uint32_t lead_inv = inv(f.back());
        while (a.size() > df) {
            const std::uint32_t c = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(a.back()) * lead_inv % p);
            const std::size_t shift = a.size() - 1 - df;
            for (std::size_t j = 0; j <= df; ++j) {
                const std::uint64_t sub = static_cast<std::uint64_t>(c) * f[j] % p;
                a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
            }
            trim(a);
        }
        return a;
    }

    Poly mul(const Poly& a, const Poly& b) const
    {
        if (a.empty() || b.empty()) return {};
        Poly out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] = static_cast<std::uint32_t>(
                    (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
        trim(out);
        return out;
    }

    Poly mulmod(const Poly& a, const Poly& b, const Poly& f) const { return mod(mul(a, b), f); }

    Poly powmod(Poly base, std::uint64_t e, const Poly& f) const
    {
        Poly r{1};
        base = mod(base, f);
        while (e) {
            if (e & 1) r = mulmod(r, base, f);
            base = mulmod(base, base, f);
            e >>= 1;
        }
        return r;
    }

    Poly sub(Poly a, const Poly& b) const
    {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (std::size_t j = 0; j < b.size(); ++j) a[j] = (a[j] + p - b[j]) % p;
        trim(a);
        return a;
    }

    Poly gcd(Poly a, Poly b) const
    {
        trim(a);
        trim(b);
        while (!b.empty()) {
            Poly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    // Rabin's irreducibility test for a monic f of degree d.
    bool irreducible(const Poly& f) const
    {
        const std::uint64_t d = f.size() - 1;
        const Poly x{0, 1};
        auto frob_iter = [&](std::uint64_t times) {
            Poly h = mod(x, f);
            for (std::uint64_t i = 0; i < times; ++i) h = powmod(h, p, f);
            return h;
        };
        Poly full = frob_iter(d);
        if (!sub(full, mod(x, f)).empty()) return false;
        for (std::uint64_t r : prime_factors(d)) {
            Poly g = gcd(f, sub(frob_iter(d / r), x));
            if (g.size() != 1) return false;
        }
        return true;
    }
};

Poly code_to_poly(std::uint64_t code, std::uint32_t p, int d)
{
    Poly out(d, 0);
    for (int j = 0; j < d; ++j) {
        out[j] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    trim(out);
    return out;
}

} // namespace

FieldTower FieldTower::build(std::uint32_t p, std::uint32_t a, int N)
{
    require(is_prime(p), "build_tower: p must be prime");
    require(a >= 1, "build_tower: a must be >= 1");
    require(N >= 1 && N <= 3, "build_tower: N must lie in 1..3");

    FieldTower t;
    t.cfg_.p = p;
    t.cfg_.a = a;
    t.cfg_.N = N;
    t.cfg_.degree = static_cast<int>(a) * factorial(N);
    std::uint64_t size = 1;
    for (int j = 0; j < t.cfg_.degree; ++j) {
        size *= p;
        require_budget(size <= kFieldBudget, "build_tower: ambient field exceeds 2^24 elements");
    }
    std::uint64_t q = 1;
    for (std::uint32_t j = 0; j < a; ++j) q *= p;
    t.cfg_.q = q;
    t.cfg_.size = size;
    t.group_order_ = size - 1;
    const int d = t.cfg_.degree;
    const PolyArith ar{p};

    // Least monic irreducible, ordering lower coefficients as a base-p integer
    // with the x^{d-1} coefficient most significant.
    std::uint64_t lower_bound = size;
    for (std::uint64_t c = 0; c < size; ++c) {
        Poly f = code_to_poly(c, p, d);
        f.resize(d + 1, 0);
        f[d] = 1;
        if (ar.irreducible(f)) {
            t.modulus_ = f;
            lower_bound = c;
            break;
        }
    }
    require(lower_bound < size, "build_tower: no irreducible polynomial found");
    const Poly& f = t.modulus_;

    // Least primitive element of the ambient field.
    const std::uint64_t order = t.group_order_;
    const auto order_primes = prime_factors(order);
    std::uint64_t prim = 0;
    for (std::uint64_t c = 1; c < size; ++c) {
        const Poly g = code_to_poly(c, p, d);
        bool ok = true;
        for (std::uint64_t r : order_primes) {
            Poly h = ar.powmod(g, order / r, f);
            if (h.size() == 1 && h[0] == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            prim = c;
            break;
        }
    }
    require(prim != 0, "build_tower: no primitive element found");

    // Multiplication by the primitive element as an F_p-linear map on digits.
    std::vector<std::vector<std::uint32_t>> image(d, std::vector<std::uint32_t>(d, 0));
    const Poly g = code_to_poly(prim, p, d);
    for (int j = 0; j < d; ++j) {
        Poly mono(j + 1, 0);
        mono[j] = 1;
        Poly img = ar.mulmod(mono, g, f);
        for (std::size_t s = 0; s < img.size(); ++s) image[j][s] = img[s];
    }

    t.exp_.assign(order, 0);
    t.log_.assign(size, kNoLog);
    std::vector<std::uint32_t> digits(d, 0), next(d, 0);
    digits[0] = 1;
    for (std::uint64_t k = 0; k < order; ++k) {
        std::uint64_t code = 0;
        for (int j = d; j-- > 0;) code = code * p + digits[j];
        t.exp_[k] = static_cast<Elt>(code);
        t.log_[code] = static_cast<std::uint32_t>(k);
        std::fill(next.begin(), next.end(), 0);
        for (int j = 0; j < d; ++j) {
            if (digits[j] == 0) continue;
            for (int s = 0; s < d; ++s)
                next[s] = static_cast<std::uint32_t>((next[s] + static_cast<std::uint64_t>(digits[j]) * image[j][s]) % p);
        }
        std::swap(digits, next);
    }

    // Zech logarithms: g^k + 1.
    t.zech_.assign(order, kNoLog);
    for (std::uint64_t k = 0; k < order; ++k) {
        const std::uint64_t code = t.exp_[k];
        const std::uint32_t low = static_cast<std::uint32_t>(code % p);
        const std::uint64_t plus_one = code - low + (low + 1) % p;
        if (plus_one != 0) t.zech_[k] = t.log_[plus_one];
    }

    // Frobenius levels.
    t.levels_.resize(N);
    for (int k = 1; k <= N; ++k) {
        Level& lv = t.levels_[k - 1];
        std::uint64_t qk = 1;
        for (int j = 0; j < factorial(k); ++j) qk *= q;
        lv.size = qk;
        lv.stride = order / (qk - 1);
        for (std::uint64_t c = 1; c < size; ++c) {
            const std::uint64_t L = t.log_[c];
            if (L % lv.stride != 0) continue;
            const std::uint64_t reduced = L / lv.stride;
            if (gcd_u64(reduced, qk - 1) != 1) continue;
            lv.generator = static_cast<Elt>(c);
            lv.gen_inv = invmod_u64(reduced % (qk - 1), qk - 1);
            break;
        }
        lv.members.reserve(qk);
        lv.members.push_back(0);
        const std::uint64_t glog = t.log_[lv.generator];
        for (std::uint64_t m = 0; m + 1 < qk; ++m)
            lv.members.push_back(t.exp_[static_cast<std::uint64_t>((static_cast<unsigned __int128>(glog) * m) % order)]);
    }
    t.level_of_.assign(size, static_cast<std::uint8_t>(N));
    t.level_of_[0] = 1;
    for (std::uint64_t c = 1; c < size; ++c) {
        const std::uint64_t L = t.log_[c];
        for (int k = 1; k <= N; ++k) {
            if (L % t.levels_[k - 1].stride == 0) {
                t.level_of_[c] = static_cast<std::uint8_t>(k);
                break;
            }
        }
    }
    return t;
}

std::uint64_t FieldTower::level_size(int k) const
{
    require(k >= 1 && k <= cfg_.N, "level out of range");
    return levels_[k - 1].size;
}

std::vector<std::uint32_t> FieldTower::coefficients(Elt x) const
{
    std::vector<std::uint32_t> out(cfg_.degree, 0);
    std::uint64_t c = x;
    for (int j = 0; j < cfg_.degree; ++j) {
        out[j] = static_cast<std::uint32_t>(c % cfg_.p);
        c /= cfg_.p;
    }
    return out;
}

Elt FieldTower::from_int(std::int64_t v) const
{
    std::int64_t m = v % static_cast<std::int64_t>(cfg_.p);
    if (m < 0) m += cfg_.p;
    return static_cast<Elt>(m);
}

Elt FieldTower::add(Elt x, Elt y) const
{
    if (x == 0) return y;
    if (y == 0) return x;
    const std::uint64_t lx = log_[x], ly = log_[y];
    const std::uint64_t diff = ly >= lx ? ly - lx : ly + group_order_ - lx;
    const std::uint32_t z = zech_[diff];
    if (z == kNoLog) return 0;
    std::uint64_t s = lx + z;
    if (s >= group_order_) s -= group_order_;
    return exp_[s];
}

Elt FieldTower::neg(Elt x) const
{
    if (x == 0 || cfg_.p == 2) return x;
    return mul(x, cfg_.p - 1);
}

Elt FieldTower::mul(Elt x, Elt y) const
{
    if (x == 0 || y == 0) return 0;
    std::uint64_t s = static_cast<std::uint64_t>(log_[x]) + log_[y];
    if (s >= group_order_) s -= group_order_;
    return exp_[s];
}

Elt FieldTower::inv(Elt x) const
{
    require(x != 0, "field inverse of zero");
    const std::uint64_t L = log_[x];
    return exp_[L == 0 ? 0 : group_order_ - L];
}

Elt FieldTower::pow(Elt x, std::int64_t e) const
{
    if (x == 0) {
        require(e >= 0, "negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const std::int64_t ord = static_cast<std::int64_t>(group_order_);
    std::int64_t m = static_cast<std::int64_t>((static_cast<__int128>(log_[x]) * (e % ord)) % ord);
    if (m < 0) m += ord;
    return exp_[m];
}

Elt FieldTower::frobenius(Elt x, std::int64_t j) const
{
    if (x == 0) return 0;
    require(j >= 0, "frobenius: negative exponent");
    const std::uint64_t qj = powmod_u64(cfg_.q, static_cast<std::uint64_t>(j), group_order_);
    const std::uint64_t m = static_cast<std::uint64_t>(static_cast<unsigned __int128>(log_[x]) * qj % group_order_);
    return exp_[m];
}

const std::vector<Elt>& FieldTower::level_members(int k) const
{
    require(k >= 1 && k <= cfg_.N, "level out of range");
    return levels_[k - 1].members;
}

std::uint64_t FieldTower::level_index(Elt x, int k) const
{
    return x == 0 ? 0 : 1 + dlog(x, k);
}

Elt FieldTower::generator(int k) const
{
    require(k >= 1 && k <= cfg_.N, "level out of range");
    return levels_[k - 1].generator;
}

std::uint64_t FieldTower::dlog(Elt x, int k) const
{
    require(k >= 1 && k <= cfg_.N, "level out of range");
    require(x != 0, "dlog of zero");
    const Level& lv = levels_[k - 1];
    const std::uint64_t L = log_[x];
    require(L % lv.stride == 0, "dlog: element outside level");
    const std::uint64_t m = lv.size - 1;
    if (m == 1) return 0;
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(L / lv.stride) * lv.gen_inv % m);
}

std::uint64_t FieldTower::order(Elt x) const
{
    require(x != 0, "order of zero");
    return group_order_ / gcd_u64(log_[x], group_order_);
}

std::vector<Elt> FieldTower::level_basis(int k) const
{
    const auto& members = level_members(k);
    const std::uint32_t p = cfg_.p;
    std::vector<std::vector<std::uint32_t>> rows;  // echelon rows, pivot = first nonzero
    std::vector<int> pivots;
    std::vector<Elt> basis;
    for (Elt x : members) {
        if (x == 0) continue;
        auto v = coefficients(x);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::uint32_t c = v[pivots[r]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = static_cast<std::uint32_t>((v[j] + static_cast<std::uint64_t>(p - c) * rows[r][j]) % p);
        }
        auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t c) { return c != 0; });
        if (it == v.end()) continue;
        const int piv = static_cast<int>(it - v.begin());
        const std::uint32_t s = static_cast<std::uint32_t>(powmod_u64(v[piv], p - 2, p));
        for (auto& c : v) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * s % p);
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        basis.push_back(x);
    }
    return basis;
}

} // namespace pslab
