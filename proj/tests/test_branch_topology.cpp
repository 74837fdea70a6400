#include "linkforge/branch_topology.hpp"
#include "linkforge/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace linkforge;

namespace {

LinkCandidate candidate(const char* poly, RawWeights w)
{
    return validate_candidate(parse_poly(poly), w);
}

} // namespace

TEST_CASE("branch_divisors")
{
    using D = BranchDivisor;
    // typeII q=5, alpha=3, p=4
    const auto typeII = candidate("z0^3 + z1^5 + z2^4 + z2*z3^10", {40, 24, 30, 9});
    CHECK(typeII.degree == 120);
    CHECK(branch_divisors(typeII) == std::vector<D>{{0, 3, {8, 10, 3}, 40, 4}, {3, 2, {20, 12, 15}, 60, 0}});

    const auto mixed = candidate("z0^4 + z1^4 + z2^4 + z0*z3^4", {4, 4, 4, 3});
    CHECK(branch_divisors(mixed) == std::vector<D>{{3, 4, {1, 1, 1}, 4, 6}});

    const auto tower = candidate("z0^2 + z1^8 + z2^4 + z3^16", {8, 2, 4, 1});
    CHECK(branch_divisors(tower) == std::vector<D>{{3, 2, {4, 1, 2}, 8, 2}});

    CHECK(branch_divisors(candidate("z0^3+z1^3+z2^3+z3^3", {1, 1, 1, 1})).empty());
}

TEST_CASE("branch_divisors rejects a vanishing restriction")
{
    // Every monomial contains z3 while z0, z1, z2 share the factor 2.
    const auto c = candidate("z0^2*z3 + z1^2*z3 + z2^2*z3 + z3^5", {2, 2, 2, 1});
    CHECK_THROWS_AS(branch_divisors(c), UnsupportedConfigurationError);
}

TEST_CASE("branch divisor invariants on recognized inputs")
{
    const std::vector<LinkCandidate> inputs{
        candidate("z0^4 + z1^5 + z2^15 + z2*z3^2", {15, 12, 4, 28}),
        candidate("z0^5 + z1^6 + z2^14 + z2*z3^3", {42, 35, 15, 65}),
        candidate("z0^3 + z1^4 + z2^34 + z2*z3^6", {68, 51, 6, 33}),
        candidate("z0^8 + z1^7 + z2^2*z3 + z3^2*z1", {7, 8, 16, 24}),
        candidate("z0^3 + z1^5 + z2^4 + z2*z3^10", {40, 24, 30, 9}),
    };
    for (const auto& c : inputs) {
        for (const auto& d : branch_divisors(c)) {
            CHECK(d.ram >= 2);
            CHECK(d.ram * d.reduced_degree == c.degree);
            CHECK(gcd_list({Integer(d.reduced_weights[0]), Integer(d.reduced_weights[1]),
                            Integer(d.reduced_weights[2])}) == 1);
            CHECK(d.twice_genus % 2 == 0);
        }
    }
}

TEST_CASE("curve_genus")
{
    CHECK(curve_genus({8, 10, 3}, 40) == 4);
    CHECK(curve_genus({20, 12, 15}, 60) == 0);
    CHECK(curve_genus({1, 1, 1}, 4) == 6);
    CHECK(curve_genus({4, 1, 2}, 8) == 2);
    CHECK(curve_genus({1, 1, 1}, 2) == 0);
    // Plane curves: 2g = (d-1)(d-2).
    for (std::int64_t d = 1; d <= 30; ++d) CHECK(curve_genus({1, 1, 1}, d) == (d - 1) * (d - 2));

    CHECK_THROWS_AS(curve_genus({2, 3, 5}, 7), MalformedCurveError);
    CHECK_THROWS_AS(curve_genus({1, 1, 4}, 7), MalformedCurveError); // 2g = 3
    CHECK_THROWS_AS(curve_genus({1, 1, 4}, 3), MalformedCurveError); // 2g = -1
}

TEST_CASE("torsion_group")
{
    using D = BranchDivisor;
    CHECK(torsion_group(std::vector<D>{{0, 4, {3, 1, 7}, 15, 4}}) == AbelianTorsionGroup::cyclic_power(4, 4));
    CHECK(torsion_group(std::vector<D>{{0, 3, {8, 10, 3}, 40, 4}, {3, 2, {20, 12, 15}, 60, 0}}) ==
          AbelianTorsionGroup::cyclic_power(3, 4));
    CHECK(torsion_group(std::vector<D>{}).is_trivial());
}

TEST_CASE("smale_form naming")
{
    CHECK(smale_form(0, AbelianTorsionGroup::cyclic_power(4, 4)).name() == "2M_4");
    CHECK(smale_form(3, AbelianTorsionGroup::cyclic_power(4, 6)).name() == "3M_∞ # 3M_4");
    CHECK(smale_form(3, AbelianTorsionGroup::cyclic_power(4, 6)).name(NameStyle::Machine) == "3M_inf # 3M_4");
    CHECK(smale_form(0, AbelianTorsionGroup{}).name() == "S^5");
    CHECK(smale_form(1, AbelianTorsionGroup{}).name() == "M_∞");
    CHECK(smale_form(0, AbelianTorsionGroup::cyclic_power(8, 2)).name() == "M_8");

    AbelianTorsionGroup g;
    g.add(6, 2);
    g.add(4, 2);
    const auto form = smale_form(2, g);
    CHECK(form.name() == "2M_∞ # M_2 # M_12");
    CHECK(form.blocks == std::vector<SmaleBlock>{{2, 1}, {12, 1}});

    CHECK_THROWS_AS(smale_form(0, AbelianTorsionGroup::cyclic_power(3, 3)), NotSmaleRealizableError);
    CHECK_THROWS_AS(smale_form(0, AbelianTorsionGroup::cyclic_power(6, 1)), NotSmaleRealizableError);
}

TEST_CASE("smale names read back to the same H_2")
{
    for (int trial = 0; trial < 500; ++trial) {
        const auto b2 = oracle::uniform(0, 12);
        AbelianTorsionGroup half;
        const auto summands = oracle::uniform(0, 3);
        for (int i = 0; i < summands; ++i) half.add(oracle::uniform(2, 60), oracle::uniform(1, 3));
        AbelianTorsionGroup torsion = half;
        torsion += half;

        const SmaleForm form = smale_form(b2, torsion);
        for (auto style : {NameStyle::Human, NameStyle::Machine}) {
            const auto parsed = oracle::read_smale_name(form.name(style));
            CHECK(parsed.b2 == b2);
            CHECK(isomorphic(parsed.torsion, torsion));
        }
    }
}

TEST_CASE("positive_admissible")
{
    using G = AbelianTorsionGroup;
    CHECK(positive_admissible(G::cyclic_power(3, 6)));
    CHECK_FALSE(positive_admissible(G::cyclic_power(4, 6)));
    CHECK(positive_admissible(G{}));
    CHECK(positive_admissible(G::cyclic_power(4, 4)));
    CHECK(positive_admissible(G::cyclic_power(5, 4)));
    CHECK(positive_admissible(G::cyclic_power(3, 8)));
    CHECK_FALSE(positive_admissible(G::cyclic_power(3, 10)));
    CHECK(positive_admissible(G::cyclic_power(97, 2)));
    CHECK_FALSE(positive_admissible(G::cyclic_power(7, 4)));
    CHECK(positive_admissible(G::cyclic_power(2, 14)));
    CHECK_FALSE(positive_admissible(G::cyclic_power(2, 3)));
    // Z/2 + Z/3 written as two summands is (Z/6)^1, not (Z/m)^2.
    CHECK_FALSE(positive_admissible(G::from_factors(std::vector<Integer>{2, 3})));
    // (Z/2)^2 + (Z/3)^2 = (Z/6)^2.
    G six;
    six.add(2, 2);
    six.add(3, 2);
    CHECK(positive_admissible(six));
}
