#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's arithmetic beyond reading element codes.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "pslab/config.hpp"

namespace oracle {

using Poly = std::vector<std::int64_t>;  // low to high

inline Poly digits(std::uint64_t code, std::uint32_t p, int d)
{
    Poly out(d, 0);
    for (int k = 0; k < d; ++k) {
        out[k] = code % p;
        code /= p;
    }
    return out;
}

inline std::uint64_t code_of(const Poly& f, std::uint32_t p)
{
    std::uint64_t c = 0;
    for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k) c = c * p + static_cast<std::uint64_t>(f[k]);
    return c;
}

inline void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Remainder of f modulo a monic g over F_p.
inline Poly mod(Poly f, const Poly& g, std::uint32_t p)
{
    const int dg = static_cast<int>(g.size()) - 1;
    trim(f);
    while (static_cast<int>(f.size()) - 1 >= dg) {
        const std::int64_t c = f.back();
        const int shift = static_cast<int>(f.size()) - 1 - dg;
        for (int k = 0; k <= dg; ++k) f[shift + k] = ((f[shift + k] - c * g[k]) % p + p) % p;
        trim(f);
    }
    return f;
}

/// Schoolbook product of two codes modulo the monic modulus.
inline std::uint64_t mul(std::uint64_t x, std::uint64_t y, const Poly& modulus, std::uint32_t p)
{
    const int d = static_cast<int>(modulus.size()) - 1;
    const Poly a = digits(x, p, d), b = digits(y, p, d);
    Poly prod(2 * d, 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    Poly r = mod(prod, modulus, p);
    r.resize(d, 0);
    return code_of(r, p);
}

inline std::uint64_t add(std::uint64_t x, std::uint64_t y, std::uint32_t p, int d)
{
    Poly a = digits(x, p, d), b = digits(y, p, d);
    for (int k = 0; k < d; ++k) a[k] = (a[k] + b[k]) % p;
    return code_of(a, p);
}

inline std::uint64_t pow(std::uint64_t x, std::uint64_t e, const Poly& modulus, std::uint32_t p)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, x, modulus, p);
        x = mul(x, x, modulus, p);
        e >>= 1;
    }
    return r;
}

/// Monic f of degree d is reducible iff some monic g of degree 1..d/2 divides it.
inline bool reducible(const Poly& f, std::uint32_t p)
{
    const int d = static_cast<int>(f.size()) - 1;
    for (int dg = 1; dg <= d / 2; ++dg) {
        std::uint64_t count = 1;
        for (int k = 0; k < dg; ++k) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly g = digits(low, p, dg);
            g.push_back(1);
            if (mod(f, g, p).empty()) return true;
        }
    }
    return false;
}

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Number of inversions of a one-line permutation.
inline int inversions(const std::vector<int>& perm)
{
    int c = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j) c += perm[i] > perm[j];
    return c;
}

/// Tableau criterion: x <= y iff every sorted prefix of x is entrywise below that of y.
inline bool bruhat_tableau(const std::vector<int>& x, const std::vector<int>& y)
{
    for (std::size_t m = 1; m <= x.size(); ++m) {
        std::vector<int> a(x.begin(), x.begin() + m), b(y.begin(), y.begin() + m);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (std::size_t k = 0; k < m; ++k)
            if (a[k] > b[k]) return false;
    }
    return true;
}

inline std::uint64_t ipow(std::uint64_t b, int e)
{
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// |SL_n(F_Q)| = Q^{n(n-1)/2} prod_{i=2}^n (Q^i - 1).
inline std::uint64_t sl_order(int n, std::uint64_t Q)
{
    std::uint64_t r = ipow(Q, n * (n - 1) / 2);
    for (int i = 2; i <= n; ++i) r *= ipow(Q, i) - 1;
    return r;
}

/// sum_{w in S_n} Q^{l(w)} = prod_{i=1}^{n} (1 + Q + ... + Q^{i-1}).
inline std::uint64_t poincare(int n, std::uint64_t Q)
{
    std::uint64_t r = 1;
    for (int i = 1; i <= n; ++i) {
        std::uint64_t s = 0;
        for (int j = 0; j < i; ++j) s += ipow(Q, j);
        r *= s;
    }
    return r;
}

/// Matrix product written out entrywise with the tower's scalar operations.
inline pslab::Mat mat_mul(const pslab::FieldTower& F, const pslab::Mat& a, const pslab::Mat& b)
{
    pslab::Mat c;
    c.n = a.n;
    for (int r = 0; r < a.n; ++r)
        for (int s = 0; s < a.n; ++s) {
            pslab::Elt acc = 0;
            for (int k = 0; k < a.n; ++k) acc = F.add(acc, F.mul(a(r, k), b(k, s)));
            c(r, s) = acc;
        }
    return c;
}

inline pslab::Workbench bench(const char* group, std::uint32_t p, int N, std::uint32_t a = 1)
{
    pslab::RunConfig cfg;
    cfg.group = group;
    cfg.p = p;
    cfg.a = a;
    cfg.N = N;
    return pslab::Workbench::build(cfg);
}

} // namespace oracle
