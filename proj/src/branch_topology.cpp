#include "linkforge/branch_topology.hpp"

#include "linkforge/errors.hpp"

#include <algorithm>

namespace linkforge {

namespace {

Integer gcd2(std::int64_t a, std::int64_t b)
{
    return boost::multiprecision::gcd(Integer(a), Integer(b));
}

bool restricted_polynomial_vanishes(const WeightedPolynomial& poly, int coord)
{
    return std::all_of(poly.monomials().begin(), poly.monomials().end(),
                       [coord](const Exponents& m) { return m[static_cast<std::size_t>(coord)] > 0; });
}

} // namespace

std::vector<BranchDivisor> branch_divisors(const LinkCandidate& candidate)
{
    std::vector<BranchDivisor> divisors;
    const auto& w = candidate.weights;
    for (int coord = 0; coord < static_cast<int>(kVariables); ++coord) {
        std::array<std::int64_t, 3> complementary{};
        std::size_t k = 0;
        for (std::size_t j = 0; j < kVariables; ++j) {
            if (static_cast<int>(j) != coord) complementary[k++] = w[j];
        }
        const std::int64_t ram =
            to_int64(gcd_list({Integer(complementary[0]), Integer(complementary[1]), Integer(complementary[2])}));
        if (ram < 2) continue;

        if (restricted_polynomial_vanishes(candidate.poly, coord)) {
            throw UnsupportedConfigurationError("restricting to z" + std::to_string(coord) +
                                                " = 0 kills every monomial; the branch curve is undefined");
        }
        if (candidate.degree % ram != 0) {
            throw IntegrityError("degree " + std::to_string(candidate.degree) +
                                 " is not divisible by the ramification index " + std::to_string(ram) + " of z" +
                                 std::to_string(coord) + " = 0");
        }

        BranchDivisor divisor{};
        divisor.coord = coord;
        divisor.ram = ram;
        for (std::size_t j = 0; j < 3; ++j) divisor.reduced_weights[j] = complementary[j] / ram;
        divisor.reduced_degree = candidate.degree / ram;
        divisor.twice_genus = curve_genus(divisor.reduced_weights, divisor.reduced_degree);
        divisors.push_back(divisor);
    }
    return divisors;
}

std::int64_t curve_genus(const std::array<std::int64_t, 3>& weights, std::int64_t degree)
{
    if (degree < 1) throw UsageError("curve_genus: degree must be positive");
    for (auto x : weights) {
        if (x < 1) throw UsageError("curve_genus: weights must be positive");
    }
    const Integer d = degree;
    const Integer w0 = weights[0], w1 = weights[1], w2 = weights[2];

    Rational value = Rational(d * d, w0 * w1 * w2);
    Rational pairs = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            pairs += Rational(gcd2(weights[i], weights[j]), Integer(weights[i]) * weights[j]);
        }
    }
    value -= pairs * d;
    for (std::size_t i = 0; i < 3; ++i) value += Rational(gcd2(degree, weights[i]), Integer(weights[i]));
    value -= 1;

    const std::string curve = "degree " + std::to_string(degree) + " curve in P(" + std::to_string(weights[0]) +
                              "," + std::to_string(weights[1]) + "," + std::to_string(weights[2]) + ")";
    if (boost::multiprecision::denominator(value) != 1) {
        throw MalformedCurveError("2g of " + curve + " is not an integer: " + to_string(value));
    }
    const Integer twice_genus = boost::multiprecision::numerator(value);
    if (twice_genus < 0 || twice_genus % 2 != 0) {
        throw MalformedCurveError("2g of " + curve + " is " + twice_genus.str() +
                                  ", expected a non-negative even integer");
    }
    return to_int64(twice_genus);
}

AbelianTorsionGroup torsion_group(std::span<const BranchDivisor> divisors)
{
    AbelianTorsionGroup group;
    for (const auto& d : divisors) {
        if (d.twice_genus > 0) group.add(d.ram, d.twice_genus);
    }
    return group;
}

std::string SmaleForm::name(NameStyle style) const
{
    std::vector<std::string> parts;
    if (b2 > 0) {
        const std::string inf = style == NameStyle::Human ? "M_∞" : "M_inf";
        parts.push_back((b2 == 1 ? std::string() : std::to_string(b2)) + inf);
    }
    for (const auto& block : blocks) {
        parts.push_back((block.count == 1 ? std::string() : std::to_string(block.count)) + "M_" +
                        block.modulus.str());
    }
    if (parts.empty()) return "S^5";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += " # " + parts[i];
    return out;
}

SmaleForm smale_form(std::int64_t b2, const AbelianTorsionGroup& torsion)
{
    if (b2 < 0) throw UsageError("smale_form: b2 must be non-negative");
    SmaleForm form;
    form.b2 = b2;
    form.factors = invariant_factors(torsion);
    for (std::size_t i = 0; i < form.factors.size();) {
        std::size_t j = i;
        while (j < form.factors.size() && form.factors[j] == form.factors[i]) ++j;
        const std::size_t run = j - i;
        if (run % 2 != 0) {
            throw NotSmaleRealizableError("torsion " + torsion.to_string() + " has invariant factor " +
                                          form.factors[i].str() + " with odd multiplicity " +
                                          std::to_string(run) + "; it is not of the form G + G");
        }
        form.blocks.push_back({form.factors[i], static_cast<std::int64_t>(run / 2)});
        i = j;
    }
    return form;
}

bool positive_admissible(const AbelianTorsionGroup& torsion)
{
    const auto factors = invariant_factors(torsion);
    if (factors.empty()) return true;
    const bool constant = std::all_of(factors.begin(), factors.end(), [&](const Integer& f) { return f == factors[0]; });
    if (!constant) return false;
    const Integer& m = factors[0];
    const std::size_t rank = factors.size();
    if (rank == 2) return true; // (Z/m)^2
    if (m == 2) return rank % 2 == 0; // (Z/2)^{2n}
    if (m == 3) return rank == 4 || rank == 6 || rank == 8;
    if (m == 4 || m == 5) return rank == 4;
    return false;
}

} // namespace linkforge
