#pragma once

#include "linkforge/branch_topology.hpp"
#include "linkforge/exact_arith.hpp"
#include "linkforge/link_model.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace linkforge {

/// Everything computed about one link candidate.
struct LinkReport {
    RawWeights weights{};
    std::string polynomial;
    std::int64_t degree = 0;
    PolyTemplate poly_template = PolyTemplate::Unknown;
    bool isolated_verified = false;
    SasakiIndex sasaki{0, SasakiSign::Null};
    // A negative Sasakian link carries negative eta-Einstein and Lorentzian Sasaki-Einstein metrics.
    bool lse_exists = false;
    bool eta_einstein_exists = false;
    bool spin = true;
    std::vector<BranchDivisor> branch_divisors;
    std::string divisor;
    std::int64_t b2 = 0;
    std::vector<Integer> torsion; // invariant factors, ascending
    SmaleForm smale;
    bool positive_admissible = false;

    bool operator==(const LinkReport& other) const;
};

// validate -> sasaki_index -> branch_divisors -> orlik_divisor -> betti2 -> torsion -> smale_form.
LinkReport analyze(const LinkCandidate& candidate);
LinkReport analyze(std::string_view weights, std::string_view poly);

// One-line JSON record with a fixed field order.
std::string to_record(const LinkReport& report);
LinkReport from_record(std::string_view line);

void write_text(std::ostream& os, const LinkReport& report);

std::vector<std::string> warnings(const LinkReport& report);

// Catalog: UTF-8 file, one record per line, append-only.
std::filesystem::path default_catalog_path();
void append_catalog(const std::filesystem::path& path, const std::vector<LinkReport>& reports);
std::vector<LinkReport> read_catalog(const std::filesystem::path& path);

} // namespace linkforge
