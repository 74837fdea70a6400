#include "linkforge/exact_arith.hpp"

#include "linkforge/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace linkforge {

Integer gcd_list(std::span<const Integer> values)
{
    if (values.empty()) throw UsageError("gcd_list: empty list");
    Integer g = 0;
    for (const auto& v : values) {
        if (v < 1) throw UsageError("gcd_list: values must be positive");
        g = boost::multiprecision::gcd(g, v);
    }
    return g;
}

Integer gcd_list(std::initializer_list<Integer> values)
{
    return gcd_list(std::span<const Integer>(values.begin(), values.size()));
}

Integer lcm_list(std::span<const Integer> values)
{
    if (values.empty()) throw UsageError("lcm_list: empty list");
    Integer l = 1;
    for (const auto& v : values) {
        if (v < 1) throw UsageError("lcm_list: values must be positive");
        l = l / boost::multiprecision::gcd(l, v) * v;
    }
    return l;
}

ReducedFraction reduce_fraction(const Integer& numerator, const Integer& denominator)
{
    if (denominator == 0) throw UsageError("reduce_fraction: zero denominator");
    if (numerator < 1 || denominator < 1)
        throw UsageError("reduce_fraction: numerator and denominator must be positive");
    const Integer g = boost::multiprecision::gcd(numerator, denominator);
    return {numerator / g, denominator / g};
}

std::int64_t to_int64(const Integer& value)
{
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min())
        throw IntegrityError("integer " + value.str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(value);
}

Integer to_integer(const Rational& value, const char* what)
{
    if (boost::multiprecision::denominator(value) != 1) {
        throw IntegrityError(std::string(what) + " is not an integer: " + to_string(value));
    }
    return boost::multiprecision::numerator(value);
}

std::string to_string(const Rational& value)
{
    const Integer& num = boost::multiprecision::numerator(value);
    const Integer& den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

PrimePowerFactorization::PrimePowerFactorization(const Integer& n)
{
    if (n < 1) throw UsageError("factorization of a non-positive integer");
    Integer rest = n;
    for (Integer p = 2; p * p <= rest; ++p) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) entries_.emplace(p, e);
    }
    if (rest > 1) entries_.emplace(rest, 1);
}

Integer PrimePowerFactorization::product() const
{
    Integer n = 1;
    for (const auto& [p, e] : entries_) n *= boost::multiprecision::pow(p, static_cast<unsigned>(e));
    return n;
}

AbelianTorsionGroup AbelianTorsionGroup::cyclic_power(const Integer& modulus, std::int64_t multiplicity)
{
    AbelianTorsionGroup g;
    g.add(modulus, multiplicity);
    return g;
}

AbelianTorsionGroup AbelianTorsionGroup::from_factors(std::span<const Integer> moduli)
{
    AbelianTorsionGroup g;
    for (const auto& m : moduli) g.add(m, 1);
    return g;
}

void AbelianTorsionGroup::add(const Integer& modulus, std::int64_t multiplicity)
{
    if (modulus < 1) throw UsageError("cyclic summand modulus must be positive");
    if (multiplicity < 0) throw UsageError("cyclic summand multiplicity must be non-negative");
    if (modulus == 1 || multiplicity == 0) return;
    summands_[modulus] += multiplicity;
}

AbelianTorsionGroup& AbelianTorsionGroup::operator+=(const AbelianTorsionGroup& other)
{
    for (const auto& [m, k] : other.summands_) add(m, k);
    return *this;
}

Integer AbelianTorsionGroup::order() const
{
    Integer n = 1;
    for (const auto& [m, k] : summands_) n *= boost::multiprecision::pow(m, static_cast<unsigned>(k));
    return n;
}

std::string AbelianTorsionGroup::to_string() const
{
    if (summands_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, k] : summands_) {
        if (!first) os << " + ";
        first = false;
        os << "(Z/" << m << ")";
        if (k != 1) os << "^" << k;
    }
    return os.str();
}

std::vector<Integer> invariant_factors(const AbelianTorsionGroup& group)
{
    // Per prime, the multiset of exponents contributed by each cyclic summand.
    std::map<Integer, std::vector<int>> exponents;
    for (const auto& [modulus, multiplicity] : group.summands()) {
        const PrimePowerFactorization f(modulus);
        for (const auto& [p, e] : f.entries()) {
            auto& list = exponents[p];
            list.insert(list.end(), static_cast<std::size_t>(multiplicity), e);
        }
    }

    std::size_t length = 0;
    for (auto& [p, list] : exponents) {
        std::sort(list.begin(), list.end(), std::greater<>());
        length = std::max(length, list.size());
    }

    // The j-th largest factor takes the j-th largest exponent of every prime.
    std::vector<Integer> factors(length, 1);
    for (const auto& [p, list] : exponents) {
        for (std::size_t j = 0; j < list.size(); ++j) {
            factors[j] *= boost::multiprecision::pow(p, static_cast<unsigned>(list[j]));
        }
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

bool isomorphic(const AbelianTorsionGroup& a, const AbelianTorsionGroup& b)
{
    return invariant_factors(a) == invariant_factors(b);
}

} // namespace linkforge
