#pragma once

#include <cstdint>
#include <vector>

#include "pslab/errors.hpp"

namespace pslab {

using Coef = std::uint32_t;

/// Arithmetic in F_ell for a prime ell < 2^31. Values are canonical residues.
class PrimeField {
public:
    PrimeField() = default;
    explicit PrimeField(std::uint32_t ell) : ell_(ell) { require(ell >= 2, "PrimeField: modulus must be >= 2"); }

    std::uint32_t modulus() const { return ell_; }

    Coef add(Coef a, Coef b) const
    {
        std::uint32_t s = a + b;
        return s >= ell_ ? s - ell_ : s;
    }
    Coef sub(Coef a, Coef b) const { return a >= b ? a - b : a + ell_ - b; }
    Coef neg(Coef a) const { return a == 0 ? 0 : ell_ - a; }
    Coef mul(Coef a, Coef b) const
    {
        return static_cast<Coef>((static_cast<std::uint64_t>(a) * b) % ell_);
    }
    Coef pow(Coef a, std::uint64_t e) const
    {
        std::uint64_t r = 1 % ell_, b = a % ell_;
        while (e) {
            if (e & 1) r = r * b % ell_;
            b = b * b % ell_;
            e >>= 1;
        }
        return static_cast<Coef>(r);
    }
    Coef inv(Coef a) const
    {
        require(a % ell_ != 0, "PrimeField: inverse of zero");
        return pow(a, ell_ - 2);
    }
    Coef from_int(std::int64_t v) const
    {
        std::int64_t m = v % static_cast<std::int64_t>(ell_);
        return static_cast<Coef>(m < 0 ? m + ell_ : m);
    }

private:
    std::uint32_t ell_ = 2;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
// Inverse of a modulo m, assuming gcd(a, m) = 1 (m = 1 returns 0).
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);

} // namespace pslab
