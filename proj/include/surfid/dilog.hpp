#pragma once

// Real dilogarithm, Rogers dilogarithm and the lasso function.
//
// Every branch reduces its argument into [0, 1/2] (Rogers) or [-1/2, 1/2]
// (Li2) where the defining power series converges at least geometrically
// with ratio 1/2.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <string>

#include "surfid/errors.hpp"

namespace surfid {

namespace detail {

template <std::floating_point Scalar>
constexpr Scalar series_floor() {
    return std::max(Scalar(1e-17), std::numeric_limits<Scalar>::epsilon() / Scalar(16));
}

inline constexpr int kSeriesTermCap = 200;

// sum_{n>=1} z^n / n^2 for |z| <= 1/2.
template <std::floating_point Scalar>
Scalar li2_series(Scalar z) {
    Scalar sum = 0;
    Scalar power = z;
    for (int n = 1; n <= kSeriesTermCap; ++n) {
        const Scalar term = power / (Scalar(n) * Scalar(n));
        sum += term;
        if (std::abs(term) < series_floor<Scalar>()) break;
        power *= z;
    }
    return sum;
}

// L(w) for w in [0, 1] where the caller also supplies 1 - w computed without
// cancellation.
template <std::floating_point Scalar>
Scalar rogers_unit(Scalar w, Scalar one_minus_w) {
    constexpr Scalar kL1 = std::numbers::pi_v<Scalar> * std::numbers::pi_v<Scalar> / 6;
    if (w <= 0) return 0;
    if (one_minus_w <= 0) return kL1;
    if (w <= Scalar(0.5)) {
        return li2_series(w) + Scalar(0.5) * std::log(w) * std::log(one_minus_w);
    }
    // Euler reflection L(w) + L(1 - w) = L(1).
    return kL1 - (li2_series(one_minus_w) + Scalar(0.5) * std::log(one_minus_w) * std::log(w));
}

template <std::floating_point Scalar>
void require_finite(Scalar z, const char* fn) {
    if (!std::isfinite(z)) throw DomainError(std::string(fn) + ": non-finite argument");
}

}  // namespace detail

/// Classical dilogarithm Li2(z) = sum z^n / n^2, continued to z <= 1.
template <std::floating_point Scalar>
Scalar li2(Scalar z) {
    constexpr Scalar pi2_6 = std::numbers::pi_v<Scalar> * std::numbers::pi_v<Scalar> / 6;
    detail::require_finite(z, "li2");
    if (z > 1) throw DomainError("li2: argument must be <= 1");
    if (z == 1) return pi2_6;
    if (std::abs(z) <= Scalar(0.5)) return detail::li2_series(z);
    if (z > 0) {
        // Euler: Li2(z) + Li2(1 - z) = pi^2/6 - log z log(1 - z)
        const Scalar w = 1 - z;
        return pi2_6 - std::log(z) * std::log1p(-z) - detail::li2_series(w);
    }
    if (z >= -1) {
        // Landen: Li2(z) = -Li2(z / (z - 1)) - log^2(1 - z) / 2
        const Scalar l = std::log1p(-z);
        return -detail::li2_series(z / (z - 1)) - Scalar(0.5) * l * l;
    }
    // Inversion: Li2(z) = -pi^2/6 - log^2(-z) / 2 - Li2(1 / z)
    const Scalar l = std::log(-z);
    return -pi2_6 - Scalar(0.5) * l * l - li2(1 / z);
}

/// Rogers dilogarithm L(z) = Li2(z) + log|z| log(1 - z) / 2 on z <= 1.
///
/// Increasing on (-inf, 1] with L(0) = 0, L(1/2) = pi^2/12, L(1) = pi^2/6 and
/// L(z) -> -pi^2/6 as z -> -inf. Negative arguments go through Landen's
/// identity L(z) = -L(z / (z - 1)).
template <std::floating_point Scalar>
Scalar rogers_L(Scalar z) {
    detail::require_finite(z, "rogers_L");
    if (z > 1) throw DomainError("rogers_L: argument must be <= 1");
    if (z >= 0) return detail::rogers_unit(z, 1 - z);
    // w = -z / (1 - z) in (0, 1), 1 - w = 1 / (1 - z)
    const Scalar denom = 1 - z;
    return -detail::rogers_unit(-z / denom, 1 / denom);
}

/// Variant that returns the limit -pi^2/6 for every z below `limit_floor`.
template <std::floating_point Scalar>
Scalar rogers_L(Scalar z, Scalar limit_floor) {
    detail::require_finite(z, "rogers_L");
    if (z < limit_floor) return -std::numbers::pi_v<Scalar> * std::numbers::pi_v<Scalar> / 6;
    return rogers_L(z);
}

/// Lasso function La(x, y) = L(y) + L((1-y)/(1-xy)) - L((1-x)/(1-xy)) on the
/// unit square minus the corner xy = 1.
template <std::floating_point Scalar>
Scalar lasso(Scalar x, Scalar y) {
    detail::require_finite(x, "lasso");
    detail::require_finite(y, "lasso");
    if (x < 0 || x > 1 || y < 0 || y > 1) {
        throw DomainError("lasso: arguments must lie in [0, 1]");
    }
    const Scalar denom = 1 - x * y;
    if (denom <= 0) throw SingularInputError("lasso: singular at xy = 1");
    // With x, y <= 1 both ratios lie in [0, 1]; clamp rounding overshoot.
    const Scalar u = std::min(Scalar(1), (1 - y) / denom);
    const Scalar v = std::min(Scalar(1), (1 - x) / denom);
    return rogers_L(y) + rogers_L(u) - rogers_L(v);
}

}  // namespace surfid
