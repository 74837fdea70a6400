#pragma once

#include "linkforge/exact_arith.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace linkforge {

/// Element of the Milnor-Orlik ring: a finite rational combination of the
/// symbols L[n], n >= 1, multiplied by L[a] L[b] = gcd(a,b) L[lcm(a,b)].
/// L[1] is the unit, so constants live at index 1.
///
/// The term map never stores zero coefficients.
class LambdaSum {
public:
    LambdaSum() = default;

    static LambdaSum constant(const Rational& c);
    static LambdaSum symbol(const Integer& index, const Rational& coefficient = 1);

    const std::map<Integer, Rational>& terms() const { return terms_; }
    Rational coefficient(const Integer& index) const;
    Rational constant_term() const { return coefficient(1); }
    bool is_zero() const { return terms_.empty(); }

    // Sum of every coefficient, constant term included.
    Rational coefficient_sum() const;

    LambdaSum& operator+=(const LambdaSum& other);
    LambdaSum& operator-=(const LambdaSum& other);
    LambdaSum& operator*=(const LambdaSum& other);
    LambdaSum& operator*=(const Rational& scalar);

    friend LambdaSum operator+(LambdaSum a, const LambdaSum& b) { return a += b; }
    friend LambdaSum operator-(LambdaSum a, const LambdaSum& b) { return a -= b; }
    friend LambdaSum operator*(const LambdaSum& a, const LambdaSum& b);
    friend LambdaSum operator*(LambdaSum a, const Rational& s) { return a *= s; }
    friend LambdaSum operator*(const Rational& s, LambdaSum a) { return a *= s; }
    LambdaSum operator-() const;

    bool operator==(const LambdaSum&) const = default;

    // Descending index order, e.g. "9*L[16] - 7*L[4] + 1"; "0" for the zero sum.
    std::string to_string() const;

private:
    void accumulate(const Integer& index, const Rational& coefficient);

    std::map<Integer, Rational> terms_;
};

LambdaSum lam_mul(const LambdaSum& a, const LambdaSum& b);

/// prod_i ((1/v_i) L[u_i] - 1) where u_i/v_i is degree/weights[i] in lowest terms.
/// Throws DegenerateInputError if some u_i is 1.
LambdaSum orlik_divisor(const std::array<std::int64_t, 4>& weights, std::int64_t degree);

/// Second Betti number of the link: the coefficient sum of the divisor.
/// The constant term must be exactly 1 and the sum a non-negative integer,
/// otherwise IntegrityError.
std::int64_t betti2(const LambdaSum& divisor);

} // namespace linkforge
