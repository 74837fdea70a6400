#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace linkforge {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer gcd_list(std::span<const Integer> values);
Integer gcd_list(std::initializer_list<Integer> values);
Integer lcm_list(std::span<const Integer> values);

struct ReducedFraction {
    Integer u;
    Integer v;

    bool operator==(const ReducedFraction&) const = default;
};

// numerator/denominator in lowest terms.
ReducedFraction reduce_fraction(const Integer& numerator, const Integer& denominator);

// Narrowing conversion that throws IntegrityError instead of truncating.
std::int64_t to_int64(const Integer& value);

// Exact integer value of a rational, or IntegrityError if it is not integral.
Integer to_integer(const Rational& value, const char* what);

// Rendered as "a" or "a/b".
std::string to_string(const Rational& value);

/// Prime -> exponent map of a positive integer, computed by trial division.
/// The map is empty exactly when the input is 1.
class PrimePowerFactorization {
public:
    explicit PrimePowerFactorization(const Integer& n);

    const std::map<Integer, int>& entries() const { return entries_; }
    Integer product() const;

private:
    std::map<Integer, int> entries_;
};

/// A finite abelian group written as a direct sum of cyclic summands
/// (Z/modulus)^multiplicity. Summands with equal modulus are merged, so the
/// stored form has distinct moduli. Modulus 1 summands are trivial and dropped.
///
/// Equality is structural (same summands); use isomorphic() to compare groups.
class AbelianTorsionGroup {
public:
    AbelianTorsionGroup() = default;

    static AbelianTorsionGroup cyclic_power(const Integer& modulus, std::int64_t multiplicity);
    static AbelianTorsionGroup from_factors(std::span<const Integer> moduli);

    void add(const Integer& modulus, std::int64_t multiplicity = 1);
    AbelianTorsionGroup& operator+=(const AbelianTorsionGroup& other);

    const std::map<Integer, std::int64_t>& summands() const { return summands_; }
    bool is_trivial() const { return summands_.empty(); }
    Integer order() const;

    bool operator==(const AbelianTorsionGroup&) const = default;

    // e.g. "(Z/2)^2 + (Z/4)^2", "0" for the trivial group.
    std::string to_string() const;

private:
    std::map<Integer, std::int64_t> summands_;
};

/// Ascending invariant-factor chain d_1 | d_2 | ... | d_t (all d_j >= 2).
std::vector<Integer> invariant_factors(const AbelianTorsionGroup& group);

bool isomorphic(const AbelianTorsionGroup& a, const AbelianTorsionGroup& b);

} // namespace linkforge
