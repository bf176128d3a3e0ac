#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pslab/errors.hpp"
#include "pslab/field_tower.hpp"

using namespace pslab;

namespace {

oracle::Poly modulus_of(const FieldTower& F)
{
    oracle::Poly m;
    for (auto c : F.modulus()) m.push_back(c);
    return m;
}

} // namespace

TEST_CASE("prime helpers agree with trial division")
{
    for (std::uint64_t n = 0; n < 2000; ++n) CHECK(is_prime(n) == oracle::is_prime(n));
    const PrimeField F(101);
    for (Coef a = 1; a < 101; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
}

TEST_CASE("tower sizes")
{
    CHECK(FieldTower::build(3, 1, 2).size() == 9);
    CHECK(FieldTower::build(2, 1, 3).size() == 64);
    CHECK(FieldTower::build(2, 2, 2).size() == 16);
    CHECK(FieldTower::build(3, 1, 3).size() == 729);
    const auto F = FieldTower::build(2, 1, 3);
    CHECK(F.level_size(1) == 2);
    CHECK(F.level_size(2) == 4);
    CHECK(F.level_size(3) == 64);
}

TEST_CASE("modulus is the least monic irreducible")
{
    for (auto [p, a, N] : {std::tuple{2u, 1u, 2}, {2u, 1u, 3}, {3u, 1u, 2}, {2u, 2u, 2}, {5u, 1u, 2}, {3u, 1u, 3}}) {
        const auto F = FieldTower::build(p, a, N);
        const oracle::Poly m = modulus_of(F);
        const int d = static_cast<int>(m.size()) - 1;
        CHECK(!oracle::reducible(m, p));
        oracle::Poly low(m.begin(), m.end() - 1);
        const std::uint64_t mine = oracle::code_of(low, p);
        for (std::uint64_t c = 0; c < mine; ++c) {
            oracle::Poly f = oracle::digits(c, p, d);
            f.push_back(1);
            CHECK(oracle::reducible(f, p));
        }
    }
}

TEST_CASE("multiplication and addition match schoolbook arithmetic")
{
    for (auto [p, a, N] : {std::tuple{2u, 1u, 3}, {3u, 1u, 2}, {2u, 2u, 2}, {5u, 1u, 2}}) {
        const auto F = FieldTower::build(p, a, N);
        const auto m = modulus_of(F);
        const int d = static_cast<int>(m.size()) - 1;
        for (Elt x = 0; x < F.size(); ++x)
            for (Elt y = 0; y < F.size(); ++y) {
                REQUIRE(F.mul(x, y) == oracle::mul(x, y, m, p));
                REQUIRE(F.add(x, y) == oracle::add(x, y, p, d));
            }
    }
    const auto F = FieldTower::build(3, 1, 3);
    const auto m = modulus_of(F);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Elt> pick(0, static_cast<Elt>(F.size() - 1));
    for (int s = 0; s < 10000; ++s) {
        const Elt x = pick(rng), y = pick(rng);
        REQUIRE(F.mul(x, y) == oracle::mul(x, y, m, 3));
    }
}

TEST_CASE("field axioms on random samples")
{
    for (auto [p, a, N] : {std::tuple{3u, 1u, 3}, {2u, 1u, 3}, {7u, 1u, 2}}) {
        const auto F = FieldTower::build(p, a, N);
        std::mt19937_64 rng(p * 1000 + N);
        std::uniform_int_distribution<Elt> pick(0, static_cast<Elt>(F.size() - 1));
        for (int s = 0; s < 10000; ++s) {
            const Elt x = pick(rng), y = pick(rng), z = pick(rng);
            REQUIRE(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
            REQUIRE(F.add(F.add(x, y), z) == F.add(x, F.add(y, z)));
            REQUIRE(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
            REQUIRE(F.mul(x, y) == F.mul(y, x));
            REQUIRE(F.add(x, F.neg(x)) == 0);
            REQUIRE(F.sub(F.add(x, y), y) == x);
            if (x != 0) REQUIRE(F.mul(x, F.inv(x)) == 1);
        }
    }
}

TEST_CASE("levels are Frobenius fixed fields")
{
    for (auto [p, a, N] : {std::tuple{2u, 1u, 3}, {3u, 1u, 2}, {2u, 2u, 2}}) {
        const auto F = FieldTower::build(p, a, N);
        const auto m = modulus_of(F);
        for (int k = 1; k <= N; ++k) {
            const std::uint64_t Qk = F.level_size(k);
            const auto& members = F.level_members(k);
            CHECK(members.size() == Qk);
            CHECK(members[0] == 0);
            std::uint64_t count = 0;
            for (Elt x = 0; x < F.size(); ++x) {
                const bool fixed = oracle::pow(x, Qk, m, p) == x;
                CHECK(F.in_level(x, k) == fixed);
                count += fixed;
            }
            CHECK(count == Qk);
            const Elt g = F.generator(k);
            CHECK(F.order(g) == Qk - 1);
            for (std::uint64_t idx = 1; idx < Qk; ++idx) {
                CHECK(members[idx] == oracle::pow(g, idx - 1, m, p));
                CHECK(F.dlog(members[idx], k) == idx - 1);
                CHECK(F.level_index(members[idx], k) == idx);
            }
            std::size_t degree = 0;
            for (std::uint64_t s = 1; s < Qk; s *= p) ++degree;
            CHECK(F.level_basis(k).size() == degree);
        }
    }
}

TEST_CASE("frobenius is a field automorphism")
{
    const auto F = FieldTower::build(2, 1, 3);
    for (Elt x = 0; x < F.size(); ++x)
        for (Elt y = 0; y < F.size(); ++y) {
            REQUIRE(F.frobenius(F.mul(x, y), 1) == F.mul(F.frobenius(x, 1), F.frobenius(y, 1)));
            REQUIRE(F.frobenius(F.add(x, y), 1) == F.add(F.frobenius(x, 1), F.frobenius(y, 1)));
        }
    for (Elt x = 0; x < F.size(); ++x) CHECK(F.frobenius(x, 6) == x);
}

TEST_CASE("preconditions and budgets")
{
    CHECK_THROWS_AS(FieldTower::build(4, 1, 1), PreconditionError);
    CHECK_THROWS_AS(FieldTower::build(3, 1, 4), PreconditionError);
    CHECK_THROWS_AS(FieldTower::build(3, 0, 1), PreconditionError);
    CHECK_THROWS_AS(FieldTower::build(2, 5, 3), BudgetExceeded);
    const auto F = FieldTower::build(3, 1, 2);
    CHECK_THROWS_AS(F.inv(0), PreconditionError);
    CHECK_THROWS_AS(F.dlog(0, 1), PreconditionError);
    CHECK_THROWS_AS(F.level_members(3), PreconditionError);
    Elt outside = 0;
    while (F.in_level(outside, 1)) ++outside;
    CHECK_THROWS_AS(F.dlog(outside, 1), PreconditionError);
}
