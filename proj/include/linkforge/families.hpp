#pragma once

#include "linkforge/exact_arith.hpp"
#include "linkforge/link_model.hpp"
#include "linkforge/report.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linkforge {

enum class FamilyKind {
    TypeII,  // (q, alpha, p): z0^alpha + z1^q + z2^p + z2*z3^(2q)
    Tower,   // (l, n): z0^2 + z1^(2l) + z2^l + z3^(2nl)
    Mixed,   // (k, n): z0^(k+1) + z1^(k+1) + z2^(k+1) + z0*z3^n
    CycleMP, // (m, p): z0^m + z1^p + z2^2*z3 + z3^2*z1
};

std::string to_string(FamilyKind kind);
FamilyKind family_from_string(std::string_view name);

// Parameter names in the order generators take them.
std::span<const std::string_view> parameter_names(FamilyKind kind);

struct FamilySpec {
    FamilyKind kind;
    std::vector<std::int64_t> params;

    std::string to_string() const; // "typeII(q=5, alpha=3, p=4)"
};

/// Outcome of a generator: a certified candidate, or the first violated condition.
struct FamilyResult {
    FamilySpec spec;
    std::optional<LinkCandidate> candidate;
    std::string failed_condition;

    bool valid() const { return candidate.has_value(); }
};

FamilyResult family_typeII(std::int64_t q, std::int64_t alpha, std::int64_t p);
FamilyResult family_tower(std::int64_t l, std::int64_t n);
FamilyResult family_mixed(std::int64_t k, std::int64_t n);
FamilyResult family_cycle_mp(std::int64_t m, std::int64_t p);

FamilyResult make_family(const FamilySpec& spec);

/// A negative Sasakian link with torsion exactly (Z/n)^(2s): the tower family at l = 2s + 2.
LinkCandidate torsion_target(std::int64_t n, std::int64_t s);

struct ParamRange {
    std::int64_t lo;
    std::int64_t hi;
};

// "5..7" or "5".
ParamRange parse_range(std::string_view text);

inline constexpr std::int64_t kMaxSearchCells = 10'000'000;

struct SearchQuery {
    FamilyKind family = FamilyKind::TypeII;
    std::vector<ParamRange> ranges; // one per parameter, in parameter_names() order
    std::optional<AbelianTorsionGroup> torsion;
    std::optional<std::string> name;
    std::optional<SasakiSign> sign;
    std::optional<std::int64_t> b2;
};

bool matches(const SearchQuery& query, const LinkReport& report);

/// Reports for every valid grid point passing the filters, in lexicographic
/// parameter order. Cells may be evaluated on several threads.
std::vector<LinkReport> search(const SearchQuery& query, unsigned threads = 0);

} // namespace linkforge
