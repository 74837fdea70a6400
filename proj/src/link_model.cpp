#include "linkforge/link_model.hpp"

#include "linkforge/errors.hpp"
#include "linkforge/exact_arith.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace linkforge {

namespace {

std::int64_t parse_positive(std::string_view digits, const char* what)
{
    std::int64_t value = 0;
    const auto* first = digits.data();
    const auto* last = digits.data() + digits.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (digits.empty() || ec != std::errc() || ptr != last) {
        throw SyntaxError(std::string("expected a positive integer for ") + what + ", got '" +
                          std::string(digits) + "'");
    }
    if (value < 1) throw SyntaxError(std::string(what) + " must be positive");
    if (value > kMaxInputValue) {
        throw ValidationError(std::string(what) + " " + std::to_string(value) + " exceeds " +
                              std::to_string(kMaxInputValue));
    }
    return value;
}

int nonzero_count(const Exponents& e)
{
    return static_cast<int>(std::count_if(e.begin(), e.end(), [](std::int64_t x) { return x > 0; }));
}

// Index of the single variable of a pure power z_i^a with a >= 2, else -1.
int pure_power_variable(const Exponents& e)
{
    if (nonzero_count(e) != 1) return -1;
    for (std::size_t i = 0; i < kVariables; ++i) {
        if (e[i] >= 2) return static_cast<int>(i);
    }
    return -1;
}

bool is_chain_augmented(const std::vector<Exponents>& pure, const Exponents& mixed)
{
    std::set<int> covered;
    for (const auto& m : pure) covered.insert(pure_power_variable(m));
    if (covered.size() != 3 || nonzero_count(mixed) != 2) return false;
    int missing = 0;
    while (covered.count(missing)) ++missing;
    if (mixed[missing] < 1) return false;
    // z_i * z_missing^b with z_i carrying a pure power.
    for (int i : covered) {
        if (mixed[i] == 1) return true;
    }
    return false;
}

bool is_cycle_augmented(const std::vector<Exponents>& pure, const std::vector<Exponents>& mixed)
{
    std::set<int> covered;
    for (const auto& m : pure) covered.insert(pure_power_variable(m));
    if (covered.size() != 2 || mixed.size() != 2) return false;
    std::vector<int> free;
    for (int v = 0; v < static_cast<int>(kVariables); ++v) {
        if (!covered.count(v)) free.push_back(v);
    }
    // One mixed monomial is z_i^2 z_j on the free pair, the other z_j^2 z_k with z_k a pure-power variable.
    for (int order = 0; order < 2; ++order) {
        const Exponents& inner = mixed[order];
        const Exponents& outer = mixed[1 - order];
        if (nonzero_count(inner) != 2 || nonzero_count(outer) != 2) continue;
        for (int swap = 0; swap < 2; ++swap) {
            const int i = free[swap];
            const int j = free[1 - swap];
            if (inner[i] != 2 || inner[j] != 1) continue;
            if (outer[j] != 2) continue;
            for (int k : covered) {
                if (outer[k] == 1) return true;
            }
        }
    }
    return false;
}

} // namespace

WeightVector::WeightVector(const RawWeights& w) : w_(w)
{
    std::vector<Integer> values;
    for (auto x : w_) {
        if (x < 1) throw ValidationError("weights must be positive integers");
        if (x > kMaxInputValue) throw ValidationError("weight exceeds " + std::to_string(kMaxInputValue));
        values.emplace_back(x);
    }
    const Integer g = gcd_list(values);
    if (g != 1) {
        throw NormalizationError("weights (" + to_string() + ") are not normalized: gcd is " + g.str() +
                                 ", expected gcd(w0,...,w3) = 1");
    }
}

std::int64_t WeightVector::sum() const
{
    std::int64_t s = 0;
    for (auto x : w_) s += x;
    return s;
}

std::string WeightVector::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < kVariables; ++i) {
        if (i) os << ",";
        os << w_[i];
    }
    return os.str();
}

RawWeights parse_weights(std::string_view text)
{
    RawWeights w{};
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string token;
        for (char c : text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)) {
            if (!std::isspace(static_cast<unsigned char>(c))) token.push_back(c);
        }
        if (count == kVariables) throw SyntaxError("expected exactly 4 weights");
        w[count++] = parse_positive(token, "weight");
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (count != kVariables) throw SyntaxError("expected exactly 4 weights, got " + std::to_string(count));
    return w;
}

WeightedPolynomial::WeightedPolynomial(std::vector<Exponents> monomials) : monomials_(std::move(monomials))
{
    if (monomials_.empty()) throw SyntaxError("polynomial has no monomials");
    std::set<Exponents> seen;
    for (const auto& m : monomials_) {
        for (auto e : m) {
            if (e < 0) throw ValidationError("negative exponent");
            if (e > kMaxInputValue) throw ValidationError("exponent exceeds " + std::to_string(kMaxInputValue));
        }
        if (nonzero_count(m) == 0) throw ValidationError("constant monomial");
        if (!seen.insert(m).second) throw ValidationError("duplicate monomial " + render_monomial(m));
    }
    std::string unused;
    for (std::size_t i = 0; i < kVariables; ++i) {
        const bool present = std::any_of(monomials_.begin(), monomials_.end(),
                                         [i](const Exponents& m) { return m[i] > 0; });
        if (!present) {
            if (!unused.empty()) unused += ", ";
            unused += "z" + std::to_string(i);
        }
    }
    if (!unused.empty()) {
        throw NonIsolatedError("variables " + unused + " unused: the singularity at the origin is not isolated");
    }
}

std::string render_monomial(const Exponents& e)
{
    std::string out;
    for (std::size_t i = 0; i < kVariables; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "z" + std::to_string(i);
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::string WeightedPolynomial::to_string() const
{
    std::string out;
    for (const auto& m : monomials_) {
        if (!out.empty()) out += " + ";
        out += render_monomial(m);
    }
    return out;
}

WeightedPolynomial parse_poly(std::string_view text)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw SyntaxError("polynomial syntax error at offset " + std::to_string(pos) + ": " + what);
    };
    auto read_digits = [&]() {
        const std::size_t begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return std::string_view(s).substr(begin, pos - begin);
    };

    std::vector<Exponents> monomials;
    while (true) {
        Exponents term{};
        while (true) {
            if (pos >= s.size() || s[pos] != 'z') fail("expected variable 'z<i>'");
            ++pos;
            const auto index = read_digits();
            if (index.empty()) fail("expected variable index after 'z'");
            if (index.size() != 1 || index[0] > '3') {
                throw SyntaxError("variable index z" + std::string(index) + " out of range 0..3");
            }
            const std::size_t var = static_cast<std::size_t>(index[0] - '0');
            std::int64_t exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                const auto digits = read_digits();
                if (digits.empty()) fail("expected a numeric exponent");
                exponent = parse_positive(digits, "exponent");
            }
            term[var] += exponent;
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        monomials.push_back(term);
        if (pos == s.size()) break;
        if (s[pos] != '+') fail(std::string("unexpected character '") + s[pos] + "'");
        ++pos;
    }
    return WeightedPolynomial(std::move(monomials));
}

std::int64_t weighted_degree(const WeightedPolynomial& poly, const WeightVector& weights)
{
    auto degree_of = [&](const Exponents& m) {
        std::int64_t d = 0;
        for (std::size_t i = 0; i < kVariables; ++i) d += m[i] * weights[i];
        return d;
    };
    const auto& monomials = poly.monomials();
    const std::int64_t d = degree_of(monomials.front());
    for (const auto& m : monomials) {
        const std::int64_t dm = degree_of(m);
        if (dm != d) {
            throw NonHomogeneousError("polynomial is not weighted homogeneous for weights (" + weights.to_string() +
                                      "): " + render_monomial(monomials.front()) + " has degree " +
                                      std::to_string(d) + " but " + render_monomial(m) + " has degree " +
                                      std::to_string(dm));
        }
    }
    return d;
}

std::string to_string(PolyTemplate t)
{
    switch (t) {
    case PolyTemplate::BrieskornPham: return "BrieskornPham";
    case PolyTemplate::ChainAugmented: return "ChainAugmented";
    case PolyTemplate::CycleAugmented: return "CycleAugmented";
    case PolyTemplate::Unknown: return "Unknown";
    }
    return "Unknown";
}

PolyTemplate template_from_string(std::string_view s)
{
    for (auto t : {PolyTemplate::BrieskornPham, PolyTemplate::ChainAugmented, PolyTemplate::CycleAugmented,
                   PolyTemplate::Unknown}) {
        if (to_string(t) == s) return t;
    }
    throw ValidationError("unknown polynomial template '" + std::string(s) + "'");
}

PolyTemplate classify_template(const WeightedPolynomial& poly)
{
    const auto& monomials = poly.monomials();
    if (monomials.size() != kVariables) return PolyTemplate::Unknown;

    std::vector<Exponents> pure;
    std::vector<Exponents> mixed;
    for (const auto& m : monomials) {
        if (pure_power_variable(m) >= 0) {
            pure.push_back(m);
        } else {
            mixed.push_back(m);
        }
    }

    std::set<int> pure_vars;
    for (const auto& m : pure) pure_vars.insert(pure_power_variable(m));
    if (pure_vars.size() != pure.size()) return PolyTemplate::Unknown;

    if (pure.size() == 4) return PolyTemplate::BrieskornPham;
    if (pure.size() == 3 && is_chain_augmented(pure, mixed.front())) return PolyTemplate::ChainAugmented;
    if (pure.size() == 2 && is_cycle_augmented(pure, mixed)) return PolyTemplate::CycleAugmented;
    return PolyTemplate::Unknown;
}

LinkCandidate validate_candidate(const WeightedPolynomial& poly, const RawWeights& raw)
{
    WeightVector weights(raw);
    const std::int64_t degree = weighted_degree(poly, weights);
    const PolyTemplate t = classify_template(poly);
    return LinkCandidate{weights, poly, degree, t, t != PolyTemplate::Unknown};
}

std::string to_string(SasakiSign s)
{
    switch (s) {
    case SasakiSign::Negative: return "Negative";
    case SasakiSign::Null: return "Null";
    case SasakiSign::Positive: return "Positive";
    }
    return "Null";
}

SasakiSign sign_from_string(std::string_view s)
{
    std::string lower;
    for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "negative") return SasakiSign::Negative;
    if (lower == "null") return SasakiSign::Null;
    if (lower == "positive") return SasakiSign::Positive;
    throw UsageError("unknown Sasakian sign '" + std::string(s) + "'");
}

SasakiIndex sasaki_index(std::int64_t degree, const WeightVector& weights)
{
    const std::int64_t index = degree - weights.sum();
    const SasakiSign sign = index > 0 ? SasakiSign::Negative : index == 0 ? SasakiSign::Null : SasakiSign::Positive;
    return {index, sign};
}

} // namespace linkforge
