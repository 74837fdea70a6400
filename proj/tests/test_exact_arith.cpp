#include "linkforge/errors.hpp"
#include "linkforge/exact_arith.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace linkforge;

TEST_CASE("gcd_list")
{
    CHECK(gcd_list({6, 6, 6}) == 6);
    CHECK(gcd_list({15, 12, 4, 28}) == 1);
    CHECK(gcd_list({24, 30, 9}) == 3);
    CHECK_THROWS_AS(gcd_list(std::span<const Integer>{}), UsageError);
    CHECK_THROWS_AS(gcd_list({4, 0}), UsageError);
}

TEST_CASE("gcd_list is invariant under permutation, repetition and adjoining the gcd")
{
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Integer> values;
        const auto n = oracle::uniform(1, 6);
        for (int i = 0; i < n; ++i) values.emplace_back(oracle::uniform(1, 500));
        const Integer g = gcd_list(values);
        for (const auto& v : values) CHECK(v % g == 0);

        auto shuffled = values;
        std::shuffle(shuffled.begin(), shuffled.end(), oracle::rng());
        shuffled.push_back(shuffled.front());
        CHECK(gcd_list(shuffled) == g);
        shuffled.push_back(g);
        CHECK(gcd_list(shuffled) == g);
    }
}

TEST_CASE("lcm_list")
{
    const std::vector<Integer> v{4, 6, 10};
    CHECK(lcm_list(v) == 60);
}

TEST_CASE("reduce_fraction")
{
    CHECK(reduce_fraction(16, 3) == ReducedFraction{16, 3});
    CHECK(reduce_fraction(60, 15) == ReducedFraction{4, 1});
    CHECK(reduce_fraction(210, 65) == ReducedFraction{42, 13});
    CHECK_THROWS_AS(reduce_fraction(5, 0), UsageError);

    for (int trial = 0; trial < 300; ++trial) {
        const Integer a = oracle::uniform(1, 100000);
        const Integer b = oracle::uniform(1, 100000);
        const auto [u, v] = reduce_fraction(a, b);
        CHECK(boost::multiprecision::gcd(u, v) == 1);
        CHECK(u * b == v * a);
    }
}

TEST_CASE("prime factorization reconstructs its input")
{
    CHECK(PrimePowerFactorization(1).entries().empty());
    const PrimePowerFactorization f(720);
    CHECK(f.entries() == std::map<Integer, int>{{2, 4}, {3, 2}, {5, 1}});
    CHECK(PrimePowerFactorization(999999937).entries() == std::map<Integer, int>{{999999937, 1}});
    for (int trial = 0; trial < 300; ++trial) {
        const Integer n = oracle::uniform(1, 1'000'000);
        const PrimePowerFactorization pf(n);
        CHECK(pf.product() == n);
        for (const auto& [p, e] : pf.entries()) CHECK(PrimePowerFactorization(p).entries().size() == 1);
    }
}

TEST_CASE("invariant factors")
{
    using V = std::vector<Integer>;
    CHECK(invariant_factors(AbelianTorsionGroup::cyclic_power(4, 4)) == V{4, 4, 4, 4});

    AbelianTorsionGroup g;
    g.add(2, 2);
    g.add(4, 2);
    CHECK(invariant_factors(g) == V{2, 2, 4, 4});

    AbelianTorsionGroup h;
    h.add(6, 2);
    h.add(4, 2);
    CHECK(h.order() == 576);
    CHECK(invariant_factors(h) == V{2, 2, 12, 12});

    CHECK(invariant_factors(AbelianTorsionGroup{}).empty());

    // Z/2 + Z/3 = Z/6
    CHECK(isomorphic(AbelianTorsionGroup::from_factors(V{2, 3}), AbelianTorsionGroup::cyclic_power(6, 1)));
}

TEST_CASE("torsion group summands stay canonical")
{
    AbelianTorsionGroup g;
    g.add(3, 2);
    g.add(1, 5);
    g.add(3, 4);
    g.add(7, 0);
    CHECK(g.summands() == std::map<Integer, std::int64_t>{{3, 6}});
    CHECK(g.to_string() == "(Z/3)^6");
    CHECK(AbelianTorsionGroup{}.to_string() == "0");
}

TEST_CASE("invariant factors: divisibility chain, order and round trip on random groups")
{
    for (int trial = 0; trial < 1000; ++trial) {
        AbelianTorsionGroup g;
        std::vector<Integer> diag;
        const auto summands = oracle::uniform(0, 5);
        for (int i = 0; i < summands; ++i) {
            const auto m = oracle::uniform(2, 720);
            const auto k = oracle::uniform(1, 3);
            g.add(m, k);
            for (int j = 0; j < k; ++j) diag.emplace_back(m);
        }
        const auto factors = invariant_factors(g);
        Integer product = 1;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            CHECK(factors[j] >= 2);
            if (j > 0) CHECK(factors[j] % factors[j - 1] == 0);
            product *= factors[j];
        }
        CHECK(product == g.order());
        CHECK(factors == oracle::diagonal_smith_form(diag));
        CHECK(invariant_factors(AbelianTorsionGroup::from_factors(factors)) == factors);
    }
}

TEST_CASE("rational helpers")
{
    CHECK(to_string(Rational(3, 6)) == "1/2");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(to_integer(Rational(10, 5), "x") == 2);
    CHECK_THROWS_AS(to_integer(Rational(1, 3), "x"), IntegrityError);
    CHECK_THROWS_AS(to_int64(Integer(1) << 70), IntegrityError);
}
