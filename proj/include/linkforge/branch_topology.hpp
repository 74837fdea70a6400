#pragma once

#include "linkforge/exact_arith.hpp"
#include "linkforge/link_model.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace linkforge {

/// A curve D_i = {z_i = 0} of the quotient orbifold over which the Seifert
/// circle bundle ramifies with index `ram`.
struct BranchDivisor {
    int coord;
    std::int64_t ram;
    std::array<std::int64_t, 3> reduced_weights;
    std::int64_t reduced_degree;
    std::int64_t twice_genus;

    bool operator==(const BranchDivisor&) const = default;
};

/// One divisor per coordinate whose complementary weights share a factor >= 2,
/// ordered by coordinate. The ramification index is that gcd.
std::vector<BranchDivisor> branch_divisors(const LinkCandidate& candidate);

/// 2g of a degree-d curve in P(w0,w1,w2):
///   d^2/(w0 w1 w2) - d * sum_{i<j} gcd(wi,wj)/(wi wj) + sum_i gcd(d,wi)/wi - 1.
/// Throws MalformedCurveError unless the value is a non-negative even integer.
std::int64_t curve_genus(const std::array<std::int64_t, 3>& weights, std::int64_t degree);

/// Direct sum of (Z/ram)^(2g) over the divisors.
AbelianTorsionGroup torsion_group(std::span<const BranchDivisor> divisors);

enum class NameStyle { Human, Machine };

struct SmaleBlock {
    Integer modulus;
    std::int64_t count;

    bool operator==(const SmaleBlock&) const = default;
};

/// The Smale normal form k M_inf # s_1 M_{n_1} # ... of a simply connected spin 5-manifold.
struct SmaleForm {
    std::int64_t b2 = 0;
    std::vector<Integer> factors; // ascending invariant factors of the torsion
    std::vector<SmaleBlock> blocks; // pairs of equal factors, ascending modulus

    // "S^5", "2M_3", "3M_∞ # 3M_4"; Machine style writes M_inf.
    std::string name(NameStyle style = NameStyle::Human) const;
};

// Throws NotSmaleRealizableError if some invariant factor has odd multiplicity.
SmaleForm smale_form(std::int64_t b2, const AbelianTorsionGroup& torsion);

/// True iff the torsion is trivial or one of the groups that occur for
/// simply connected positive quasi-regular Sasakian 5-manifolds:
/// (Z/m)^2, (Z/5)^4, (Z/4)^4, (Z/3)^4, (Z/3)^6, (Z/3)^8, (Z/2)^{2n}.
bool positive_admissible(const AbelianTorsionGroup& torsion);

} // namespace linkforge
