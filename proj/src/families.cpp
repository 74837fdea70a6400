#include "linkforge/families.hpp"

#include "linkforge/errors.hpp"

#include <array>
#include <charconv>
#include <exception>
#include <thread>

namespace linkforge {

namespace {

constexpr std::array<std::string_view, 3> kTypeIIParams{"q", "alpha", "p"};
constexpr std::array<std::string_view, 2> kTowerParams{"l", "n"};
constexpr std::array<std::string_view, 2> kMixedParams{"k", "n"};
constexpr std::array<std::string_view, 2> kCycleParams{"m", "p"};

std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
    return to_int64(boost::multiprecision::gcd(Integer(a), Integer(b)));
}

bool is_prime(std::int64_t n)
{
    if (n < 2) return false;
    for (std::int64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

FamilyResult invalid(FamilySpec spec, std::string why)
{
    return FamilyResult{std::move(spec), std::nullopt, std::move(why)};
}

// Builds and certifies the candidate; generators only hand out recognized, negative links.
FamilyResult certify(FamilySpec spec, const RawWeights& weights, std::vector<Exponents> monomials)
{
    for (auto w : weights) {
        if (w < 1) return invalid(std::move(spec), "weights must be positive");
        if (w > kMaxInputValue) return invalid(std::move(spec), "weights exceed the supported input range");
    }
    for (const auto& m : monomials) {
        for (auto e : m) {
            if (e > kMaxInputValue) return invalid(std::move(spec), "exponents exceed the supported input range");
        }
    }
    Integer g = 0;
    for (auto w : weights) g = boost::multiprecision::gcd(g, Integer(w));
    if (g != 1) return invalid(std::move(spec), "weight vector gcd is " + g.str() + ", gcd(w) = 1 required");

    LinkCandidate candidate = validate_candidate(WeightedPolynomial(std::move(monomials)), weights);
    if (!candidate.isolated_verified) {
        return invalid(std::move(spec), "polynomial is not of a recognized isolated template");
    }
    if (sasaki_index(candidate.degree, candidate.weights).sign != SasakiSign::Negative) {
        return invalid(std::move(spec), "d - sum(w) > 0 fails: the link is not negative Sasakian");
    }
    return FamilyResult{std::move(spec), std::move(candidate), {}};
}

} // namespace

std::string to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::TypeII: return "typeII";
    case FamilyKind::Tower: return "tower";
    case FamilyKind::Mixed: return "mixed";
    case FamilyKind::CycleMP: return "cycle";
    }
    return "typeII";
}

FamilyKind family_from_string(std::string_view name)
{
    if (name == "typeII" || name == "typeii") return FamilyKind::TypeII;
    if (name == "tower") return FamilyKind::Tower;
    if (name == "mixed") return FamilyKind::Mixed;
    if (name == "cycle" || name == "cycle_mp" || name == "cyclemp") return FamilyKind::CycleMP;
    throw UsageError("unknown family '" + std::string(name) + "' (expected typeII, tower, mixed or cycle)");
}

std::span<const std::string_view> parameter_names(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::TypeII: return kTypeIIParams;
    case FamilyKind::Tower: return kTowerParams;
    case FamilyKind::Mixed: return kMixedParams;
    case FamilyKind::CycleMP: return kCycleParams;
    }
    return kTypeIIParams;
}

std::string FamilySpec::to_string() const
{
    const auto names = parameter_names(kind);
    std::string out = linkforge::to_string(kind) + "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ", ";
        out += std::string(i < names.size() ? names[i] : "?") + "=" + std::to_string(params[i]);
    }
    return out + ")";
}

FamilyResult family_typeII(std::int64_t q, std::int64_t alpha, std::int64_t p)
{
    FamilySpec spec{FamilyKind::TypeII, {q, alpha, p}};
    if (q < 1 || alpha < 1 || p < 1) return invalid(spec, "q, alpha, p must be positive");
    if (q == alpha || q == p || alpha == p) return invalid(spec, "q, alpha, p must be pairwise distinct");
    if (p < 2) return invalid(spec, "p >= 2 required for a positive weight alpha(p-1)");

    const Integer q_big = q;
    const Integer cofactor = Integer(2) * alpha * p * (p - 1);
    if (const Integer g = boost::multiprecision::gcd(q_big, cofactor); g != 1) {
        return invalid(spec, "gcd(q, 2*alpha*p*(p-1)) = " + g.str() + ", must be 1");
    }
    if (const auto g = gcd64(p, alpha); g != 1) {
        return invalid(spec, "gcd(p, alpha) = " + std::to_string(g) + ", must be 1");
    }
    const Integer negativity = Integer(2) * q * p * (alpha - 1) + Integer(alpha) * (1 - 3 * Integer(p) - 2 * Integer(q));
    if (negativity <= 0) {
        return invalid(spec, "2qp(alpha-1) + alpha(1-3p-2q) > 0 fails (value " + negativity.str() + ")");
    }
    return certify(std::move(spec), {2 * q * p, 2 * alpha * p, 2 * alpha * q, alpha * (p - 1)},
                   {{alpha, 0, 0, 0}, {0, q, 0, 0}, {0, 0, p, 0}, {0, 0, 1, 2 * q}});
}

FamilyResult family_tower(std::int64_t l, std::int64_t n)
{
    FamilySpec spec{FamilyKind::Tower, {l, n}};
    if (l < 4) return invalid(spec, "l >= 4 required");
    if (n < 2) return invalid(spec, "n >= 2 required");
    if (n * (l - 3) <= 1) return invalid(spec, "n(l-3) > 1 fails");
    return certify(std::move(spec), {n * l, n, 2 * n, 1},
                   {{2, 0, 0, 0}, {0, 2 * l, 0, 0}, {0, 0, l, 0}, {0, 0, 0, 2 * n * l}});
}

FamilyResult family_mixed(std::int64_t k, std::int64_t n)
{
    FamilySpec spec{FamilyKind::Mixed, {k, n}};
    if (k < 1 || n < 1) return invalid(spec, "k, n must be positive");
    if (const auto g = gcd64(n, k); g != 1) {
        return invalid(spec, "gcd(n, k) = " + std::to_string(g) + ", must be 1");
    }
    if (n * (k - 2) <= 0) return invalid(spec, "n(k-2) > 0 fails");
    // certify() additionally enforces d - sum(w) = n(k-2) - k > 0.
    return certify(std::move(spec), {n, n, n, k},
                   {{k + 1, 0, 0, 0}, {0, k + 1, 0, 0}, {0, 0, k + 1, 0}, {1, 0, 0, n}});
}

FamilyResult family_cycle_mp(std::int64_t m, std::int64_t p)
{
    FamilySpec spec{FamilyKind::CycleMP, {m, p}};
    if (m < 1 || p < 1) return invalid(spec, "m, p must be positive");
    if (p % 4 != 3) return invalid(spec, "p must be 3 (mod 4); otherwise the weight m(p+1)/4 is not integral");
    if (!is_prime(p)) return invalid(spec, "p must be prime");
    if (const auto g = gcd64(m, p); g != 1) {
        return invalid(spec, "gcd(m, p) = " + std::to_string(g) + ", must be 1");
    }
    if (m <= 4) return invalid(spec, "m > 4 required");
    const std::int64_t l = (p + 1) / 4;
    if ((m - 4) * (l - 1) <= 3) {
        return invalid(spec, "(m-4)(l-1) > 3 fails with p = 4l-1, l = " + std::to_string(l));
    }
    return certify(std::move(spec), {p, m, m * (p + 1) / 4, m * (p - 1) / 2},
                   {{m, 0, 0, 0}, {0, p, 0, 0}, {0, 0, 2, 1}, {0, 1, 0, 2}});
}

FamilyResult make_family(const FamilySpec& spec)
{
    const auto arity = parameter_names(spec.kind).size();
    if (spec.params.size() != arity) {
        throw UsageError(to_string(spec.kind) + " takes " + std::to_string(arity) + " parameters");
    }
    const auto& a = spec.params;
    switch (spec.kind) {
    case FamilyKind::TypeII: return family_typeII(a[0], a[1], a[2]);
    case FamilyKind::Tower: return family_tower(a[0], a[1]);
    case FamilyKind::Mixed: return family_mixed(a[0], a[1]);
    case FamilyKind::CycleMP: return family_cycle_mp(a[0], a[1]);
    }
    throw UsageError("unknown family");
}

LinkCandidate torsion_target(std::int64_t n, std::int64_t s)
{
    if (n <= 1 || s <= 1) throw UsageError("torsion_target requires n > 1 and s > 1");
    if (s > kMaxInputValue / 4 || n > kMaxInputValue) throw UsageError("torsion_target parameters too large");
    FamilyResult result = family_tower(2 * s + 2, n);
    if (!result.valid()) throw IntegrityError("tower witness rejected: " + result.failed_condition);
    return std::move(*result.candidate);
}

ParamRange parse_range(std::string_view text)
{
    auto parse = [&](std::string_view s) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            throw UsageError("malformed range '" + std::string(text) + "' (expected LO..HI)");
        }
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto v = parse(text);
        return {v, v};
    }
    return {parse(text.substr(0, dots)), parse(text.substr(dots + 2))};
}

bool matches(const SearchQuery& query, const LinkReport& report)
{
    if (query.b2 && report.b2 != *query.b2) return false;
    if (query.sign && report.sasaki.sign != *query.sign) return false;
    if (query.torsion && invariant_factors(*query.torsion) != report.torsion) return false;
    if (query.name) {
        std::string wanted = *query.name;
        for (auto pos = wanted.find("∞"); pos != std::string::npos; pos = wanted.find("∞")) {
            wanted.replace(pos, std::string("∞").size(), "inf");
        }
        if (wanted != report.smale.name(NameStyle::Machine)) return false;
    }
    return true;
}

std::vector<LinkReport> search(const SearchQuery& query, unsigned threads)
{
    const auto arity = parameter_names(query.family).size();
    if (query.ranges.size() != arity) {
        throw UsageError(to_string(query.family) + " search needs " + std::to_string(arity) + " parameter ranges");
    }
    std::int64_t cells = 1;
    std::vector<std::int64_t> extents;
    for (const auto& r : query.ranges) {
        if (r.lo < 1 || r.hi < r.lo || r.hi > kMaxInputValue) {
            throw UsageError("parameter ranges must satisfy 1 <= lo <= hi <= " + std::to_string(kMaxInputValue));
        }
        const std::int64_t extent = r.hi - r.lo + 1;
        if (extent > kMaxSearchCells || cells * extent > kMaxSearchCells) {
            throw UsageError("search grid exceeds " + std::to_string(kMaxSearchCells) + " cells");
        }
        cells *= extent;
        extents.push_back(extent);
    }

    // Last parameter varies fastest.
    auto spec_at = [&](std::int64_t flat) {
        FamilySpec spec{query.family, std::vector<std::int64_t>(arity)};
        for (std::size_t i = arity; i-- > 0;) {
            spec.params[i] = query.ranges[i].lo + flat % extents[i];
            flat /= extents[i];
        }
        return spec;
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    constexpr std::int64_t kBlock = 4096;
    std::vector<LinkReport> results;
    for (std::int64_t start = 0; start < cells; start += kBlock) {
        const std::int64_t count = std::min(kBlock, cells - start);
        std::vector<std::optional<LinkReport>> slots(static_cast<std::size_t>(count));
        std::vector<std::exception_ptr> errors(threads);
        auto work = [&](unsigned t, unsigned stride) {
            try {
                for (std::int64_t i = t; i < count; i += stride) {
                    const FamilyResult fr = make_family(spec_at(start + i));
                    if (!fr.valid()) continue;
                    LinkReport report = analyze(*fr.candidate);
                    if (matches(query, report)) slots[static_cast<std::size_t>(i)] = std::move(report);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        };
        if (threads == 1 || count < 64) {
            work(0, 1);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
        }
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
        for (auto& slot : slots) {
            if (slot) results.push_back(std::move(*slot));
        }
    }
    return results;
}

} // namespace linkforge
