#include "linkforge/cli.hpp"

#include "linkforge/errors.hpp"
#include "linkforge/families.hpp"
#include "linkforge/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>

namespace linkforge::cli {

namespace {

struct Table1Row {
    const char* weights;
    const char* poly;
    std::int64_t degree;
    const char* manifold;
};

constexpr Table1Row kTable1[] = {
    {"15,12,4,28", "z0^4 + z1^5 + z2^15 + z2*z3^2", 60, "2M_4"},
    {"42,35,15,65", "z0^5 + z1^6 + z2^14 + z2*z3^3", 210, "2M_5"},
    {"68,51,6,33", "z0^3 + z1^4 + z2^34 + z2*z3^6", 204, "4M_3"},
};

// Sample (m, p) instances of the z0^m + z1^p + z2^2*z3 + z3^2*z1 row; the manifold is M_m.
constexpr std::pair<std::int64_t, std::int64_t> kCycleSamples[] = {{8, 7}, {9, 11}, {13, 7}};

enum class Format { Text, Json };

Format parse_format(const std::string& s)
{
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    throw UsageError("unknown format '" + s + "' (expected text or json)");
}

void emit(std::ostream& out, const LinkReport& report, Format format)
{
    if (format == Format::Json) {
        out << to_record(report) << "\n";
    } else {
        write_text(out, report);
    }
}

int cmd_table1(std::ostream& out, std::ostream& err, Format format)
{
    struct Line {
        LinkReport report;
        std::string expected;
    };
    std::vector<Line> lines;
    for (const auto& row : kTable1) lines.push_back({analyze(row.weights, row.poly), row.manifold});
    for (const auto& [m, p] : kCycleSamples) {
        const FamilyResult fr = family_cycle_mp(m, p);
        if (!fr.valid()) throw IntegrityError("table row " + fr.spec.to_string() + " rejected: " + fr.failed_condition);
        lines.push_back({analyze(*fr.candidate), "M_" + std::to_string(m)});
    }

    int mismatches = 0;
    for (const auto& [r, expected] : lines) {
        const std::string computed = r.smale.name(NameStyle::Human);
        const bool ok = computed == expected && r.b2 == 0 && r.sasaki.sign == SasakiSign::Negative;
        if (!ok) ++mismatches;
        if (format == Format::Json) {
            out << to_record(r) << "\n";
            continue;
        }
        const std::string w = std::to_string(r.weights[0]) + "," + std::to_string(r.weights[1]) + "," +
                              std::to_string(r.weights[2]) + "," + std::to_string(r.weights[3]);
        out << "(" << w << ")";
        out << std::string(std::max<std::ptrdiff_t>(1, 16 - static_cast<std::ptrdiff_t>(w.size())), ' ');
        out << r.polynomial;
        out << std::string(std::max<std::ptrdiff_t>(1, 34 - static_cast<std::ptrdiff_t>(r.polynomial.size())), ' ');
        out << "d=" << r.degree << "  index=" << r.sasaki.index << "  b2=" << r.b2 << "  " << computed;
        out << (ok ? "  ok" : "  MISMATCH (expected " + expected + ")") << "\n";
    }
    if (mismatches > 0) {
        err << "table1: " << mismatches << " row(s) disagree with the published manifold column\n";
        return kExitGoldenMismatch;
    }
    return kExitOk;
}

} // namespace

AbelianTorsionGroup parse_torsion(std::string_view text)
{
    AbelianTorsionGroup group;
    if (text == "0" || text.empty()) return group;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const auto caret = token.find('^');
        auto number = [&](std::string_view s) {
            std::int64_t v = 0;
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
                throw UsageError("malformed torsion '" + std::string(text) + "' (expected e.g. 3^4 or 2^2,4^2)");
            }
            return v;
        };
        if (caret == std::string_view::npos) {
            group.add(number(token), 1);
        } else {
            group.add(number(token.substr(0, caret)), number(token.substr(caret + 1)));
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return group;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Topology and Sasakian sign of links of weighted homogeneous hypersurface singularities",
                 "linkforge"};
    app.require_subcommand(1);

    std::string format_text = "text";

    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one weighted homogeneous polynomial");
    std::string weights_text;
    std::string poly_text;
    analyze_cmd->add_option("--weights", weights_text, "Comma-separated weights, e.g. 15,12,4,28")->required();
    analyze_cmd->add_option("--poly", poly_text, "Monomial sum, e.g. \"z0^4+z1^5+z2^15+z2*z3^2\"")->required();
    analyze_cmd->add_option("--format", format_text, "text or json");

    auto* table_cmd = app.add_subcommand("table1", "Recompute the rational homology sphere table");
    table_cmd->add_option("--format", format_text, "text or json");

    // Family parameters are shared between `family` (single values) and `search` (ranges).
    std::map<std::string, std::string> params;
    auto add_params = [&](CLI::App* cmd) {
        for (const char* name : {"q", "alpha", "p", "l", "n", "k", "m", "s"}) {
            cmd->add_option(std::string("--") + name, params[name], std::string("family parameter ") + name);
        }
    };

    auto* family_cmd = app.add_subcommand("family", "Build and analyze one member of a parametric family");
    std::string family_name;
    family_cmd->add_option("--family", family_name, "typeII, tower, mixed, cycle, or target (torsion (Z/n)^(2s))")
        ->required();
    add_params(family_cmd);
    family_cmd->add_option("--format", format_text, "text or json");

    auto* search_cmd = app.add_subcommand("search", "Enumerate a family over parameter ranges LO..HI");
    std::string search_family;
    std::string filter_torsion, filter_name, filter_sign;
    std::int64_t filter_b2 = 0;
    std::string catalog;
    search_cmd->add_option("--family", search_family, "typeII, tower, mixed or cycle")->required();
    add_params(search_cmd);
    search_cmd->add_option("--filter-torsion", filter_torsion, "torsion group, e.g. 3^4");
    search_cmd->add_option("--filter-name", filter_name, "manifold name, e.g. 2M_3");
    search_cmd->add_option("--filter-sign", filter_sign, "negative, null or positive");
    auto* b2_opt = search_cmd->add_option("--filter-b2", filter_b2, "second Betti number");
    auto* catalog_opt = search_cmd->add_option("--catalog", catalog, "append records to a catalog file")
                            ->expected(0, 1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        const Format format = parse_format(format_text);

        if (*analyze_cmd) {
            emit(out, analyze(weights_text, poly_text), format);
            return kExitOk;
        }
        if (*table_cmd) return cmd_table1(out, err, format);

        auto value_of = [&](std::string_view name) -> const std::string& {
            const auto& v = params[std::string(name)];
            if (v.empty()) throw UsageError("missing --" + std::string(name));
            return v;
        };

        if (*family_cmd) {
            auto single = [&](std::string_view name) {
                const ParamRange r = parse_range(value_of(name));
                if (r.lo != r.hi) throw UsageError("--" + std::string(name) + " takes a single value");
                return r.lo;
            };
            if (family_name == "target") {
                emit(out, analyze(torsion_target(single("n"), single("s"))), format);
                return kExitOk;
            }
            FamilySpec spec{family_from_string(family_name), {}};
            for (auto name : parameter_names(spec.kind)) spec.params.push_back(single(name));
            const FamilyResult fr = make_family(spec);
            if (!fr.valid()) {
                err << "error: " << fr.spec.to_string() << " is invalid: " << fr.failed_condition << "\n";
                return kExitValidation;
            }
            emit(out, analyze(*fr.candidate), format);
            return kExitOk;
        }

        if (*search_cmd) {
            SearchQuery query;
            query.family = family_from_string(search_family);
            for (auto name : parameter_names(query.family)) query.ranges.push_back(parse_range(value_of(name)));
            if (!filter_torsion.empty()) query.torsion = parse_torsion(filter_torsion);
            if (!filter_name.empty()) query.name = filter_name;
            if (!filter_sign.empty()) query.sign = sign_from_string(filter_sign);
            if (b2_opt->count() > 0) query.b2 = filter_b2;

            const auto reports = search(query);
            for (const auto& r : reports) out << to_record(r) << "\n";
            if (catalog_opt->count() > 0) {
                append_catalog(catalog.empty() ? default_catalog_path() : std::filesystem::path(catalog), reports);
            }
            return kExitOk;
        }
    } catch (const IntegrityError& e) {
        err << "integrity error: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}

} // namespace linkforge::cli
