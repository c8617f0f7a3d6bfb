#pragma once

// Dilogarithm identities over the simple length spectrum of a one-holed or
// once-punctured torus, and the four-holed-sphere identities transported to
// the torus through the branched-cover correspondence
//
//   c = k / 2,  l(A) = 2 l(B),  m_A = m_B,  p_A = q_B,  q_A = p_B.
//
// Every bracket below sums to pi^2 / 2 over the spectrum (McShane's sums to
// 1 / 2).

#include <cmath>
#include <concepts>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surfid/dilog.hpp"
#include "surfid/errors.hpp"
#include "surfid/pants_trig.hpp"
#include "surfid/scc_enum.hpp"
#include "surfid/torus_moduli.hpp"

namespace surfid {

// Terms for longer geodesics are below 1e-300 and the closed forms would
// overflow cosh / exp; they are replaced by their limit 0.
inline constexpr double kNegligibleLength = 700.0;

namespace detail {

template <std::floating_point Scalar>
void require_positive(Scalar v, const char* fn) {
    if (!std::isfinite(v) || !(v > 0)) {
        throw DomainError(std::string(fn) + ": argument must be finite and positive");
    }
}

template <std::floating_point Scalar>
Scalar tanh_sq_half(Scalar len) {
    const Scalar t = std::tanh(len / 2);
    return t * t;
}

template <std::floating_point Scalar>
Scalar sech_sq_half(Scalar len) {
    const Scalar c = std::cosh(len / 2);
    return 1 / (c * c);
}

}  // namespace detail

/// Bordered torus, boundary length k, summand for a geodesic of length b:
///   L((ch(k/2)+1)/(ch(k/2)+ch b)) + 2 L(ch(k/4+b/2)/(ch(k/4) e^{b/2}))
///     - 2 L(2 sh(b/2)/((1+e^{-k/2}) e^{b/2}))
template <std::floating_point Scalar>
Scalar term_thm11(Scalar k, Scalar b) {
    detail::require_positive(k, "term_thm11");
    detail::require_positive(b, "term_thm11");
    if (b > Scalar(kNegligibleLength)) return 0;
    const Scalar chk = std::cosh(k / 2);
    const Scalar u1 = (chk + 1) / (chk + std::cosh(b));
    // cosh(k/4 + b/2) / (cosh(k/4) e^{b/2}) with the e^{b/2} divided out
    const Scalar ek = std::exp(k / 4);
    const Scalar u2 = (ek + std::exp(-b) / ek) / (ek + 1 / ek);
    // 2 sinh(b/2) / e^{b/2} = 1 - e^{-b}
    const Scalar u3 = -std::expm1(-b) / (1 + std::exp(-k / 2));
    return rogers_L(u1) + 2 * rogers_L(u2) - 2 * rogers_L(u3);
}

/// Once-punctured torus summand:
///   L(sech^2(b/2)) + 2 L((1+e^{-b})/2) - 2 L((1-e^{-b})/2)
template <std::floating_point Scalar>
Scalar term_thm12(Scalar b) {
    detail::require_positive(b, "term_thm12");
    if (b > Scalar(kNegligibleLength)) return 0;
    const Scalar e = std::exp(-b);
    return rogers_L(detail::sech_sq_half(b)) + 2 * rogers_L((1 + e) / 2) -
           2 * rogers_L(-std::expm1(-b) / 2);
}

/// Once-punctured torus summand in terms of the squared trace x = tr^2:
///   L(4/x) + 2 L(x/(x+r)) - 2 L(r/(x+r)),  r = sqrt(x^2 - 4x)
template <std::floating_point Scalar>
Scalar term_thm15(Scalar xsq) {
    if (!std::isfinite(xsq) || !(xsq > 4)) throw DomainError("term_thm15: squared trace must be > 4");
    const Scalar r = std::sqrt(xsq * (xsq - 4));
    const Scalar s = xsq + r;
    return rogers_L(4 / xsq) + 2 * rogers_L(xsq / s) - 2 * rogers_L(r / s);
}

/// Bordered torus summand in orthogeodesic form:
///   L(tanh^2(q_B/2)) + 2 L(tanh^2(m_B/2)) - 2 La(e^{-k/2}, tanh^2(m_B/2))
/// Requires e^{-k/2} < tanh^2(m_B/2).
template <std::floating_point Scalar>
Scalar term_thm31(Scalar k, Scalar m_b, Scalar q_b) {
    detail::require_positive(k, "term_thm31");
    detail::require_positive(m_b, "term_thm31");
    if (!std::isfinite(q_b) || q_b < 0) throw DomainError("term_thm31: q_B must be >= 0");
    const Scalar y = detail::tanh_sq_half(m_b);
    const Scalar x = std::exp(-k / 2);
    if (!(x < y)) throw DomainError("term_thm31: e^{-k/2} < tanh^2(m_B/2) violated");
    return rogers_L(detail::tanh_sq_half(q_b)) + 2 * rogers_L(y) - 2 * lasso(x, y);
}

enum class FourVariant { ortho, simple, cusped };

/// Four-holed sphere (boundaries of length c) summand in orthogeodesic form:
///   L(tanh^2(p_A/2)) + 2 L(tanh^2(m_A/2)) - 2 La(e^{-c}, tanh^2(m_A/2))
template <std::floating_point Scalar>
Scalar term_four_ortho(Scalar c, Scalar m_a, Scalar p_a) {
    detail::require_positive(c, "term_four_ortho");
    detail::require_positive(m_a, "term_four_ortho");
    detail::require_positive(p_a, "term_four_ortho");
    const Scalar y = detail::tanh_sq_half(m_a);
    const Scalar x = std::exp(-c);
    if (!(x < y)) throw DomainError("term_four_ortho: e^{-c} < tanh^2(m_A/2) violated");
    return rogers_L(detail::tanh_sq_half(p_a)) + 2 * rogers_L(y) - 2 * lasso(x, y);
}

/// Same summand in terms of c and the curve length a only:
///   L((ch c+1)/(ch c+ch(a/2))) + 2 L(ch(c/2+a/4)/(ch(c/2) e^{a/4}))
///     - 2 L(2 sh(a/4)/((1+e^{-c}) e^{a/4}))
template <std::floating_point Scalar>
Scalar term_four_simple(Scalar c, Scalar a) {
    detail::require_positive(c, "term_four_simple");
    detail::require_positive(a, "term_four_simple");
    if (a > 2 * Scalar(kNegligibleLength)) return 0;
    const Scalar chc = std::cosh(c);
    const Scalar u1 = (chc + 1) / (chc + std::cosh(a / 2));
    const Scalar ec = std::exp(c / 2);
    const Scalar u2 = (ec + std::exp(-a / 2) / ec) / (ec + 1 / ec);
    const Scalar u3 = -std::expm1(-a / 2) / (1 + std::exp(-c));
    return rogers_L(u1) + 2 * rogers_L(u2) - 2 * rogers_L(u3);
}

/// Quadruply punctured sphere summand:
///   L(sech^2(a/4)) + 2 L((1+e^{-a/2})/2) - 2 L((1-e^{-a/2})/2)
template <std::floating_point Scalar>
Scalar term_four_cusped(Scalar a) {
    detail::require_positive(a, "term_four_cusped");
    if (a > 2 * Scalar(kNegligibleLength)) return 0;
    const Scalar c = std::cosh(a / 4);
    const Scalar e = std::exp(-a / 2);
    return rogers_L(1 / (c * c)) + 2 * rogers_L((1 + e) / 2) - 2 * rogers_L(-std::expm1(-a / 2) / 2);
}

/// McShane summand 1 / (1 + e^b).
template <std::floating_point Scalar>
Scalar term_mcshane(Scalar b) {
    if (b >= 0) {
        const Scalar e = std::exp(-b);
        return e / (1 + e);
    }
    return 1 / (1 + std::exp(b));
}

// ---------------------------------------------------------------------------
// Luo-Tan pieces: f1 on an embedded pants, f2 on a quasi-embedded pants.

template <std::floating_point Scalar>
Scalar f1_closed(Scalar l1, Scalar l2, Scalar l3) {
    const auto g = pants_geometry(l1, l2, l3);
    Scalar sum = 0;
    for (int i = 0; i < 3; ++i) {
        sum += rogers_L(detail::tanh_sq_half(g.seam[i])) - rogers_L(detail::sech_sq_half(g.self_perp[i]));
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i != j) sum -= lasso(std::exp(-g.boundary[i]), detail::tanh_sq_half(g.seam[j]));
        }
    }
    return 8 * sum;
}

/// f1 written as 4 pi^2 minus the measure of the complementary pieces.
template <std::floating_point Scalar>
Scalar f1_complement(Scalar l1, Scalar l2, Scalar l3) {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const auto g = pants_geometry(l1, l2, l3);
    Scalar sum = 0;
    for (int i = 0; i < 3; ++i) {
        sum += rogers_L(detail::sech_sq_half(g.seam[i])) + rogers_L(detail::sech_sq_half(g.self_perp[i]));
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i != j) sum += lasso(std::exp(-g.boundary[i]), detail::tanh_sq_half(g.seam[j]));
        }
    }
    return 4 * pi * pi - 8 * sum;
}

/// f2 for the quasi-embedded pants of a torus (boundary k) containing the
/// curve of length b with orthogeodesics (m_B, p_B, q_B).
template <std::floating_point Scalar>
Scalar f2(Scalar k, Scalar b, Scalar m_b, Scalar p_b, Scalar q_b) {
    detail::require_positive(k, "f2");
    detail::require_positive(b, "f2");
    const Scalar y = detail::tanh_sq_half(m_b);
    const Scalar xb = std::exp(-b);
    const Scalar xk = std::exp(-k / 2);
    if (!(xb < y)) throw DomainError("f2: e^{-l(B)} < tanh^2(m_B/2) violated");
    if (!(xk < y)) throw DomainError("f2: e^{-k/2} < tanh^2(m_B/2) violated");
    return 8 * (rogers_L(detail::tanh_sq_half(q_b)) + 2 * rogers_L(y) -
                rogers_L(detail::sech_sq_half(p_b)) - 2 * lasso(xb, y) - 2 * lasso(xk, y));
}

/// Summand of g(T) = 4 pi^2 - sum_B (...) for one curve.
template <std::floating_point Scalar>
Scalar g_summand(Scalar b, Scalar m_b, Scalar p_b) {
    detail::require_positive(b, "g_summand");
    const Scalar y = detail::tanh_sq_half(m_b);
    const Scalar xb = std::exp(-b);
    if (!(xb < y)) throw DomainError("g_summand: e^{-l(B)} < tanh^2(m_B/2) violated");
    return 8 * (2 * lasso(xb, y) + rogers_L(detail::sech_sq_half(p_b)));
}

// ---------------------------------------------------------------------------
// Spectrum sums.

enum class IdentityKind { thm11, thm12, thm15, thm31, four, four_simple, four_cusped, mcshane };

inline constexpr IdentityKind kAllIdentityKinds[] = {
    IdentityKind::thm11, IdentityKind::thm12,       IdentityKind::thm15,       IdentityKind::thm31,
    IdentityKind::four,  IdentityKind::four_simple, IdentityKind::four_cusped, IdentityKind::mcshane};

std::string_view to_string(IdentityKind kind);
std::optional<IdentityKind> parse_identity_kind(std::string_view name);

/// Whether the kind is stated for a cusp (k = 0) rather than a boundary.
bool is_cusped(IdentityKind kind);

double identity_target(IdentityKind kind);

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double v);
    double value() const { return sum_ + correction_; }

private:
    double sum_ = 0;
    double correction_ = 0;
};

struct IdentityReport {
    IdentityKind kind = IdentityKind::thm12;
    std::vector<std::pair<std::string, double>> parameters;
    double cutoff = 0;
    std::size_t term_count = 0;
    double partial_sum = 0;
    double target = 0;
    double defect = 0;
    double tail_estimate = 0;
};

/// Heuristic remainder C e^{-L} (1 + L) with C = 4 (cosh(k/2) + 1).
double tail_estimate(double k, double cutoff);

/// Summand of `kind` for one geodesic on a torus with boundary length k.
double identity_term(IdentityKind kind, double k, const GeodesicRecord& record);

/// Throws DomainError when the point's boundary does not match the kind.
void require_compatible(IdentityKind kind, const TraceTriple& point);

std::vector<double> identity_terms(IdentityKind kind, const TraceTriple& point,
                                   const std::vector<GeodesicRecord>& records);

/// Report for an already enumerated spectrum (cutoff as used to enumerate).
IdentityReport summarize(IdentityKind kind, const TraceTriple& point, double cutoff,
                         const std::vector<GeodesicRecord>& records);

IdentityReport evaluate(IdentityKind kind, const TraceTriple& point, double cutoff,
                        const EnumerateOptions& options = {});

/// 4 pi^2 - sum_B g_summand over the records.
double g_partial(double k, const std::vector<GeodesicRecord>& records);

/// sum_B f2 over the records.
double f2_partial(double k, const std::vector<GeodesicRecord>& records);

}  // namespace surfid
