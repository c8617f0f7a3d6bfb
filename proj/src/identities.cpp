#include "surfid/identities.hpp"

#include <cmath>
#include <numbers>

namespace surfid {

std::string_view to_string(IdentityKind kind) {
    switch (kind) {
        case IdentityKind::thm11: return "thm11";
        case IdentityKind::thm12: return "thm12";
        case IdentityKind::thm15: return "thm15";
        case IdentityKind::thm31: return "thm31";
        case IdentityKind::four: return "four";
        case IdentityKind::four_simple: return "four-simple";
        case IdentityKind::four_cusped: return "four-cusped";
        case IdentityKind::mcshane: return "mcshane";
    }
    return "unknown";
}

std::optional<IdentityKind> parse_identity_kind(std::string_view name) {
    for (IdentityKind kind : kAllIdentityKinds) {
        if (to_string(kind) == name) return kind;
    }
    return std::nullopt;
}

bool is_cusped(IdentityKind kind) {
    switch (kind) {
        case IdentityKind::thm12:
        case IdentityKind::thm15:
        case IdentityKind::four_cusped:
        case IdentityKind::mcshane:
            return true;
        default:
            return false;
    }
}

double identity_target(IdentityKind kind) {
    constexpr double pi = std::numbers::pi;
    return kind == IdentityKind::mcshane ? 0.5 : pi * pi / 2;
}

void CompensatedSum::add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
        correction_ += (sum_ - t) + v;
    } else {
        correction_ += (v - t) + sum_;
    }
    sum_ = t;
}

double tail_estimate(double k, double cutoff) {
    const double c = 4 * (std::cosh(k / 2) + 1);
    return c * std::exp(-cutoff) * (1 + cutoff);
}

double identity_term(IdentityKind kind, double k, const GeodesicRecord& record) {
    const double b = record.length;
    switch (kind) {
        case IdentityKind::thm11:
            return term_thm11(k, b);
        case IdentityKind::thm12:
            return term_thm12(b);
        case IdentityKind::thm15:
            return term_thm15(record.trace * record.trace);
        case IdentityKind::thm31: {
            if (b > kNegligibleLength) return 0;
            const auto o = torus_ortho(k, b);
            return term_thm31(k, o.m, o.q);
        }
        case IdentityKind::four: {
            if (b > kNegligibleLength) return 0;
            const double c = k / 2;
            const auto o = foursphere_ortho(c, 2 * b);
            return term_four_ortho(c, o.m, o.p);
        }
        case IdentityKind::four_simple:
            return term_four_simple(k / 2, 2 * b);
        case IdentityKind::four_cusped:
            return term_four_cusped(2 * b);
        case IdentityKind::mcshane:
            return term_mcshane(b);
    }
    throw DomainError("identity_term: unknown identity kind");
}

void require_compatible(IdentityKind kind, const TraceTriple& point) {
    if (is_cusped(kind)) {
        if (point.k != 0) {
            throw DomainError(std::string(to_string(kind)) + " requires a cusped torus (k = 0)");
        }
    } else if (!(point.k >= kMinBoundaryLength)) {
        throw DomainError(std::string(to_string(kind)) + " requires a geodesic boundary (k > 0)");
    }
}

std::vector<double> identity_terms(IdentityKind kind, const TraceTriple& point,
                                   const std::vector<GeodesicRecord>& records) {
    require_compatible(kind, point);
    std::vector<double> terms;
    terms.reserve(records.size());
    for (const auto& r : records) terms.push_back(identity_term(kind, point.k, r));
    return terms;
}

IdentityReport summarize(IdentityKind kind, const TraceTriple& point, double cutoff,
                         const std::vector<GeodesicRecord>& records) {
    const auto terms = identity_terms(kind, point, records);
    CompensatedSum sum;
    for (double t : terms) sum.add(t);

    IdentityReport report;
    report.kind = kind;
    report.parameters = {{"x", point.x}, {"y", point.y}, {"z", point.z}, {"k", point.k}};
    if (kind == IdentityKind::four || kind == IdentityKind::four_simple) {
        report.parameters.emplace_back("c", point.k / 2);
    }
    report.cutoff = cutoff;
    report.term_count = records.size();
    report.partial_sum = sum.value();
    report.target = identity_target(kind);
    report.defect = report.target - report.partial_sum;
    report.tail_estimate = tail_estimate(point.k, cutoff);
    return report;
}

IdentityReport evaluate(IdentityKind kind, const TraceTriple& point, double cutoff,
                        const EnumerateOptions& options) {
    require_compatible(kind, point);
    return summarize(kind, point, cutoff, enumerate(point, cutoff, options));
}

double g_partial(double k, const std::vector<GeodesicRecord>& records) {
    constexpr double pi = std::numbers::pi;
    CompensatedSum sum;
    sum.add(4 * pi * pi);
    for (const auto& r : records) {
        if (r.length > kNegligibleLength) continue;
        const auto o = torus_ortho(k, r.length);
        sum.add(-g_summand(r.length, o.m, o.p));
    }
    return sum.value();
}

double f2_partial(double k, const std::vector<GeodesicRecord>& records) {
    CompensatedSum sum;
    for (const auto& r : records) {
        if (r.length > kNegligibleLength) continue;
        const auto o = torus_ortho(k, r.length);
        sum.add(f2(k, r.length, o.m, o.p, o.q));
    }
    return sum.value();
}

}  // namespace surfid
