#include "linkforge/report.hpp"

#include "linkforge/errors.hpp"
#include "linkforge/orlik_ring.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>

namespace linkforge {

using Json = nlohmann::ordered_json;

bool LinkReport::operator==(const LinkReport& other) const
{
    return weights == other.weights && polynomial == other.polynomial && degree == other.degree &&
           poly_template == other.poly_template && isolated_verified == other.isolated_verified &&
           sasaki == other.sasaki && lse_exists == other.lse_exists &&
           eta_einstein_exists == other.eta_einstein_exists && spin == other.spin &&
           branch_divisors == other.branch_divisors && divisor == other.divisor && b2 == other.b2 &&
           torsion == other.torsion && smale.name() == other.smale.name() &&
           positive_admissible == other.positive_admissible;
}

LinkReport analyze(const LinkCandidate& candidate)
{
    LinkReport r;
    r.weights = candidate.weights.values();
    r.polynomial = candidate.poly.to_string();
    r.degree = candidate.degree;
    r.poly_template = candidate.poly_template;
    r.isolated_verified = candidate.isolated_verified;
    r.sasaki = sasaki_index(candidate.degree, candidate.weights);
    r.lse_exists = r.sasaki.sign == SasakiSign::Negative;
    r.eta_einstein_exists = r.lse_exists;
    r.spin = true;
    r.branch_divisors = branch_divisors(candidate);
    const LambdaSum divisor = orlik_divisor(candidate.weights.values(), candidate.degree);
    r.divisor = divisor.to_string();
    r.b2 = betti2(divisor);
    const AbelianTorsionGroup torsion = torsion_group(r.branch_divisors);
    r.smale = smale_form(r.b2, torsion);
    r.torsion = r.smale.factors;
    r.positive_admissible = positive_admissible(torsion);
    return r;
}

LinkReport analyze(std::string_view weights, std::string_view poly)
{
    return analyze(validate_candidate(parse_poly(poly), parse_weights(weights)));
}

std::string to_record(const LinkReport& r)
{
    Json j;
    j["weights"] = r.weights;
    j["polynomial"] = r.polynomial;
    j["degree"] = r.degree;
    j["template"] = to_string(r.poly_template);
    j["isolated_verified"] = r.isolated_verified;
    j["sasaki_index"] = r.sasaki.index;
    j["sign"] = to_string(r.sasaki.sign);
    j["lse_exists"] = r.lse_exists;
    j["eta_einstein_exists"] = r.eta_einstein_exists;
    j["spin"] = r.spin;
    Json divisors = Json::array();
    for (const auto& d : r.branch_divisors) {
        Json e;
        e["coord"] = d.coord;
        e["ram"] = d.ram;
        e["reduced_weights"] = d.reduced_weights;
        e["reduced_degree"] = d.reduced_degree;
        e["twice_genus"] = d.twice_genus;
        divisors.push_back(std::move(e));
    }
    j["branch_divisors"] = std::move(divisors);
    j["divisor"] = r.divisor;
    j["b2"] = r.b2;
    Json torsion = Json::array();
    for (const auto& f : r.torsion) torsion.push_back(to_int64(f));
    j["torsion"] = std::move(torsion);
    j["manifold"] = r.smale.name(NameStyle::Machine);
    j["positive_admissible"] = r.positive_admissible;
    return j.dump();
}

LinkReport from_record(std::string_view line)
{
    try {
        const Json j = Json::parse(line);
        LinkReport r;
        r.weights = j.at("weights").get<RawWeights>();
        r.polynomial = j.at("polynomial").get<std::string>();
        r.degree = j.at("degree").get<std::int64_t>();
        r.poly_template = template_from_string(j.at("template").get<std::string>());
        r.isolated_verified = j.at("isolated_verified").get<bool>();
        r.sasaki.index = j.at("sasaki_index").get<std::int64_t>();
        r.sasaki.sign = sign_from_string(j.at("sign").get<std::string>());
        r.lse_exists = j.at("lse_exists").get<bool>();
        r.eta_einstein_exists = j.at("eta_einstein_exists").get<bool>();
        r.spin = j.at("spin").get<bool>();
        for (const auto& e : j.at("branch_divisors")) {
            BranchDivisor d{};
            d.coord = e.at("coord").get<int>();
            d.ram = e.at("ram").get<std::int64_t>();
            d.reduced_weights = e.at("reduced_weights").get<std::array<std::int64_t, 3>>();
            d.reduced_degree = e.at("reduced_degree").get<std::int64_t>();
            d.twice_genus = e.at("twice_genus").get<std::int64_t>();
            r.branch_divisors.push_back(d);
        }
        r.divisor = j.at("divisor").get<std::string>();
        r.b2 = j.at("b2").get<std::int64_t>();
        for (const auto& f : j.at("torsion")) r.torsion.emplace_back(f.get<std::int64_t>());
        r.smale = smale_form(r.b2, AbelianTorsionGroup::from_factors(r.torsion));
        if (r.smale.factors != r.torsion) {
            throw ValidationError("record torsion is not an invariant-factor chain");
        }
        const auto manifold = j.at("manifold").get<std::string>();
        if (r.smale.name(NameStyle::Machine) != manifold) {
            throw ValidationError("record manifold '" + manifold + "' disagrees with its torsion and b2");
        }
        r.positive_admissible = j.at("positive_admissible").get<bool>();
        return r;
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("malformed report record: ") + e.what());
    }
}

std::vector<std::string> warnings(const LinkReport& r)
{
    std::vector<std::string> out;
    if (!r.isolated_verified) {
        out.push_back("polynomial shape not recognized: isolatedness is not verified and the "
                      "ramification-index rule has not been validated for this template");
    }
    return out;
}

void write_text(std::ostream& os, const LinkReport& r)
{
    os << "weights              " << r.weights[0] << "," << r.weights[1] << "," << r.weights[2] << ","
       << r.weights[3] << "\n";
    os << "polynomial           " << r.polynomial << "\n";
    os << "degree               " << r.degree << "\n";
    os << "template             " << to_string(r.poly_template)
       << (r.isolated_verified ? " (isolated singularity verified)" : " (isolatedness unverified)") << "\n";
    os << "sasaki index         " << r.sasaki.index << " (";
    switch (r.sasaki.sign) {
    case SasakiSign::Negative: os << "Negative"; break;
    case SasakiSign::Null: os << "Null"; break;
    case SasakiSign::Positive: os << "Positive: positive-type index"; break;
    }
    os << ")\n";
    os << "eta-Einstein metric  " << (r.eta_einstein_exists ? "yes" : "not implied") << "\n";
    os << "Lorentzian SE metric " << (r.lse_exists ? "yes" : "not implied") << "\n";
    os << "spin                 " << (r.spin ? "yes" : "no") << "\n";
    os << "branch divisors      " << (r.branch_divisors.empty() ? "none" : "") << "\n";
    for (const auto& d : r.branch_divisors) {
        os << "  z" << d.coord << " = 0: ramification " << d.ram << ", curve of degree " << d.reduced_degree
           << " in P(" << d.reduced_weights[0] << "," << d.reduced_weights[1] << "," << d.reduced_weights[2]
           << "), 2g = " << d.twice_genus << "\n";
    }
    os << "divisor              " << r.divisor << "\n";
    os << "b2                   " << r.b2 << "\n";
    os << "H_2                  ";
    if (r.b2 == 0 && r.torsion.empty()) os << "0";
    if (r.b2 > 0) os << "Z" << (r.b2 > 1 ? "^" + std::to_string(r.b2) : "");
    if (!r.torsion.empty()) {
        os << (r.b2 > 0 ? " + " : "") << AbelianTorsionGroup::from_factors(r.torsion).to_string();
    }
    os << "\n";
    os << "manifold             " << r.smale.name(NameStyle::Human) << "\n";
    os << "positive admissible  " << (r.positive_admissible ? "yes" : "no") << "\n";
    for (const auto& w : warnings(r)) os << "warning: " << w << "\n";
}

std::filesystem::path default_catalog_path()
{
    if (const char* env = std::getenv("LINKFORGE_CATALOG"); env != nullptr && *env != '\0') return env;
    return "linkforge_catalog.jsonl";
}

void append_catalog(const std::filesystem::path& path, const std::vector<LinkReport>& reports)
{
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) throw UsageError("cannot open catalog " + path.string() + " for appending");
    for (const auto& r : reports) out << to_record(r) << "\n";
    if (!out) throw UsageError("failed writing catalog " + path.string());
}

std::vector<LinkReport> read_catalog(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open catalog " + path.string());
    std::vector<LinkReport> reports;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        reports.push_back(from_record(line));
    }
    return reports;
}

} // namespace linkforge
