#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace linkforge {

inline constexpr std::size_t kVariables = 4;

// Weights, exponents and degrees are desk-scale inputs; anything larger is rejected.
inline constexpr std::int64_t kMaxInputValue = 1'000'000'000;

using RawWeights = std::array<std::int64_t, kVariables>;
using Exponents = std::array<std::int64_t, kVariables>;

/// Positive weights (w0, w1, w2, w3) with gcd 1.
class WeightVector {
public:
    // Throws NormalizationError when gcd(w) != 1, ValidationError on non-positive entries.
    explicit WeightVector(const RawWeights& w);

    const RawWeights& values() const { return w_; }
    std::int64_t operator[](std::size_t i) const { return w_[i]; }
    std::int64_t sum() const;

    bool operator==(const WeightVector&) const = default;

    std::string to_string() const; // "15,12,4,28"

private:
    RawWeights w_;
};

// "15,12,4,28" -> {15,12,4,28}; no normalization check.
RawWeights parse_weights(std::string_view text);

/// A sum of monomials with unit coefficients in z0..z3.
class WeightedPolynomial {
public:
    // Throws on empty input, duplicate monomials, or a variable that never occurs.
    explicit WeightedPolynomial(std::vector<Exponents> monomials);

    const std::vector<Exponents>& monomials() const { return monomials_; }

    bool operator==(const WeightedPolynomial&) const = default;

    // Canonical text, e.g. "z0^4 + z1^5 + z2^15 + z2*z3^2".
    std::string to_string() const;

private:
    std::vector<Exponents> monomials_;
};

std::string render_monomial(const Exponents& e);

/// Grammar: term ('+' term)*, term = factor ('*' factor)*, factor = 'z'<0-3> ['^'<positive int>].
/// Whitespace is ignored; repeated variables inside a term multiply.
WeightedPolynomial parse_poly(std::string_view text);

std::int64_t weighted_degree(const WeightedPolynomial& poly, const WeightVector& weights);

enum class PolyTemplate { BrieskornPham, ChainAugmented, CycleAugmented, Unknown };

std::string to_string(PolyTemplate t);
PolyTemplate template_from_string(std::string_view s);

PolyTemplate classify_template(const WeightedPolynomial& poly);

struct LinkCandidate {
    WeightVector weights;
    WeightedPolynomial poly;
    std::int64_t degree;
    PolyTemplate poly_template;
    bool isolated_verified;
};

LinkCandidate validate_candidate(const WeightedPolynomial& poly, const RawWeights& weights);

enum class SasakiSign { Negative, Null, Positive };

std::string to_string(SasakiSign s);
SasakiSign sign_from_string(std::string_view s);

struct SasakiIndex {
    std::int64_t index;
    SasakiSign sign;

    bool operator==(const SasakiIndex&) const = default;
};

// index = d - sum(w); positive index means negative Sasakian.
SasakiIndex sasaki_index(std::int64_t degree, const WeightVector& weights);

} // namespace linkforge
