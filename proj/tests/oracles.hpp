#pragma once

// Independent reference computations used only by the tests.

#include "linkforge/exact_arith.hpp"
#include "linkforge/orlik_ring.hpp"

#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using linkforge::Integer;
using linkforge::Rational;

// Number of (j0..j3), 1 <= ji <= ai-1, with sum ji/ai an integer: the
// multiplicity of eigenvalue 1 of the Brieskorn-Pham monodromy.
inline std::int64_t brieskorn_eigenvalue_one(const std::array<std::int64_t, 4>& a)
{
    const std::int64_t L = std::lcm(std::lcm(a[0], a[1]), std::lcm(a[2], a[3]));
    std::int64_t count = 0;
    for (std::int64_t j0 = 1; j0 < a[0]; ++j0)
        for (std::int64_t j1 = 1; j1 < a[1]; ++j1)
            for (std::int64_t j2 = 1; j2 < a[2]; ++j2)
                for (std::int64_t j3 = 1; j3 < a[3]; ++j3) {
                    const std::int64_t s = j0 * (L / a[0]) + j1 * (L / a[1]) + j2 * (L / a[2]) + j3 * (L / a[3]);
                    if (s % L == 0) ++count;
                }
    return count;
}

// Milnor algebra Poincare polynomial prod_i (t^wi - t^d) / (1 - t^wi); the
// monodromy eigenvalue-1 multiplicity is the total coefficient on exponents
// divisible by d. Valid for any isolated weighted homogeneous singularity.
inline std::int64_t milnor_algebra_eigenvalue_one(const std::array<std::int64_t, 4>& w, std::int64_t d)
{
    std::vector<Integer> num{1};
    std::vector<Integer> den{1};
    auto mul = [](const std::vector<Integer>& a, const std::vector<Integer>& b) {
        std::vector<Integer> c(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return c;
    };
    for (auto wi : w) {
        std::vector<Integer> f(static_cast<std::size_t>(d) + 1);
        f[static_cast<std::size_t>(wi)] += 1;
        f[static_cast<std::size_t>(d)] -= 1;
        num = mul(num, f);
        std::vector<Integer> g(static_cast<std::size_t>(wi) + 1);
        g[0] = 1;
        g[static_cast<std::size_t>(wi)] = -1;
        den = mul(den, g);
    }
    // Power series division by a polynomial with constant term 1.
    std::vector<Integer> q(num.size());
    std::vector<Integer> rem = num;
    for (std::size_t i = 0; i < rem.size(); ++i) {
        if (rem[i] == 0) continue;
        if (i + den.size() - 1 >= rem.size()) throw std::logic_error("Poincare series is not a polynomial");
        q[i] = rem[i];
        for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= q[i] * den[j];
    }
    Integer count = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (static_cast<std::int64_t>(i) % d == 0) count += q[i];
    }
    return static_cast<std::int64_t>(count);
}

// Diagonal Smith normal form by repeated (a, b) -> (gcd, lcm) swaps.
inline std::vector<Integer> diagonal_smith_form(std::vector<Integer> diag)
{
    for (std::size_t i = 0; i < diag.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            const Integer g = boost::multiprecision::gcd(diag[i], diag[j]);
            const Integer l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    std::vector<Integer> out;
    for (const auto& d : diag) {
        if (d != 1) out.push_back(d);
    }
    return out;
}

// Ring homomorphism L[n] -> (n if n | m else 0); together these separate elements.
inline Rational lambda_character(const linkforge::LambdaSum& s, const Integer& m)
{
    Rational v = 0;
    for (const auto& [index, c] : s.terms()) {
        if (m % index == 0) v += c * Rational(index);
    }
    return v;
}

struct ParsedName {
    std::int64_t b2 = 0;
    linkforge::AbelianTorsionGroup torsion;
};

// Reads "S^5", "3M_∞ # 3M_4", "M_inf # M_2" back into H_2 data.
inline ParsedName read_smale_name(const std::string& name)
{
    ParsedName out;
    if (name == "S^5") return out;
    std::size_t start = 0;
    while (true) {
        const auto sep = name.find(" # ", start);
        const std::string block = name.substr(start, sep == std::string::npos ? std::string::npos : sep - start);
        const auto m = block.find("M_");
        if (m == std::string::npos) throw std::invalid_argument("bad block " + block);
        const std::int64_t count = m == 0 ? 1 : std::stoll(block.substr(0, m));
        const std::string tail = block.substr(m + 2);
        if (tail == "∞" || tail == "inf") {
            out.b2 += count;
        } else {
            out.torsion.add(Integer(tail), 2 * count);
        }
        if (sep == std::string::npos) break;
        start = sep + 3;
    }
    return out;
}

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(0x5eed1234u);
    return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline linkforge::LambdaSum random_lambda_sum(std::int64_t max_index = 60, int max_terms = 5)
{
    linkforge::LambdaSum s;
    const int terms = static_cast<int>(uniform(0, max_terms));
    for (int i = 0; i < terms; ++i) {
        s += linkforge::LambdaSum::symbol(uniform(1, max_index), Rational(uniform(-9, 9)));
    }
    return s;
}

} // namespace oracle
