#include "linkforge/orlik_ring.hpp"

#include "linkforge/errors.hpp"

#include <sstream>

namespace linkforge {

LambdaSum LambdaSum::constant(const Rational& c)
{
    LambdaSum s;
    s.accumulate(1, c);
    return s;
}

LambdaSum LambdaSum::symbol(const Integer& index, const Rational& coefficient)
{
    if (index < 1) throw UsageError("Lambda index must be positive");
    LambdaSum s;
    s.accumulate(index, coefficient);
    return s;
}

Rational LambdaSum::coefficient(const Integer& index) const
{
    const auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LambdaSum::coefficient_sum() const
{
    Rational total = 0;
    for (const auto& [index, c] : terms_) total += c;
    return total;
}

void LambdaSum::accumulate(const Integer& index, const Rational& coefficient)
{
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(index, coefficient);
    if (inserted) return;
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
}

LambdaSum& LambdaSum::operator+=(const LambdaSum& other)
{
    for (const auto& [index, c] : other.terms_) accumulate(index, c);
    return *this;
}

LambdaSum& LambdaSum::operator-=(const LambdaSum& other)
{
    for (const auto& [index, c] : other.terms_) accumulate(index, -c);
    return *this;
}

LambdaSum& LambdaSum::operator*=(const LambdaSum& other)
{
    *this = *this * other;
    return *this;
}

LambdaSum& LambdaSum::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [index, c] : terms_) c *= scalar;
    return *this;
}

LambdaSum operator*(const LambdaSum& a, const LambdaSum& b)
{
    LambdaSum product;
    for (const auto& [i, ci] : a.terms_) {
        for (const auto& [j, cj] : b.terms_) {
            const Integer g = boost::multiprecision::gcd(i, j);
            product.accumulate(i / g * j, ci * cj * g);
        }
    }
    return product;
}

LambdaSum LambdaSum::operator-() const
{
    LambdaSum negated = *this;
    for (auto& [index, c] : negated.terms_) c = -c;
    return negated;
}

std::string LambdaSum::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [index, c] = *it;
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (index == 1) {
            os << linkforge::to_string(magnitude);
        } else {
            if (magnitude != 1) os << linkforge::to_string(magnitude) << "*";
            os << "L[" << index << "]";
        }
    }
    return os.str();
}

LambdaSum lam_mul(const LambdaSum& a, const LambdaSum& b)
{
    return a * b;
}

LambdaSum orlik_divisor(const std::array<std::int64_t, 4>& weights, std::int64_t degree)
{
    if (degree < 2) throw UsageError("orlik_divisor: degree must be at least 2");
    LambdaSum divisor = LambdaSum::constant(1);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 1) throw UsageError("orlik_divisor: weights must be positive");
        const auto [u, v] = reduce_fraction(degree, weights[i]);
        if (u == 1) {
            throw DegenerateInputError("degree " + std::to_string(degree) + " / weight w" +
                                       std::to_string(i) + " = " + std::to_string(weights[i]) +
                                       " reduces to u = 1");
        }
        divisor *= LambdaSum::symbol(u, Rational(1, v)) - LambdaSum::constant(1);
    }
    return divisor;
}

std::int64_t betti2(const LambdaSum& divisor)
{
    if (divisor.constant_term() != 1) {
        throw IntegrityError("divisor constant term is " + to_string(divisor.constant_term()) +
                             ", expected 1");
    }
    const Integer total = to_integer(divisor.coefficient_sum(), "divisor coefficient sum");
    if (total < 0) throw IntegrityError("divisor coefficient sum is negative: " + total.str());
    return to_int64(total);
}

} // namespace linkforge
