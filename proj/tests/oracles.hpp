#pragma once

// Test-only reference computations. None of these share code paths with the
// library: dilogarithms come from quadrature of the integral definition,
// orthogeodesics from axes of explicit SL(2, R) matrices, slope counts from
// brute-force gcd loops, spectra from unpruned tree expansion.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Real = long double;
using Mat2 = Eigen::Matrix<Real, 2, 2>;

// Tanh-sinh quadrature of f over [0, z] (or [z, 0]); tolerant of integrable
// endpoint singularities.
inline Real tanh_sinh(const std::function<Real(Real)>& f, Real z) {
    const Real half_pi = std::acos(Real(-1)) / 2;
    const Real h = Real(1) / 128;
    Real sum = 0;
    for (int i = -6 * 128; i <= 6 * 128; ++i) {
        const Real t = h * i;
        const Real s = half_pi * std::sinh(t);
        const Real w = half_pi * std::cosh(t) / (std::cosh(s) * std::cosh(s));
        // node in (0, 1): (1 + tanh s) / 2, written to avoid cancellation
        const Real x = 1 / (1 + std::exp(-2 * s));
        if (x <= 0 || x >= 1) continue;
        sum += w / 2 * f(z * x);
    }
    return sum * h * z;
}

// Li2(z) = -int_0^z log(1 - u) / u du, for z < 1.
inline Real li2(Real z) {
    if (z == 0) return 0;
    return -tanh_sinh([](Real u) { return u == 0 ? Real(-1) : std::log1p(-u) / u; }, z);
}

inline Real rogers(Real z) {
    if (z == 0) return 0;
    return li2(z) + std::log(std::abs(z)) * std::log1p(-z) / 2;
}

// sum_{n>=1} z^n / n^2 summed directly, for |z| <= 1/2.
inline Real li2_direct_series(Real z) {
    Real sum = 0;
    Real power = z;
    for (int n = 1; n < 400; ++n) {
        sum += power / (Real(n) * n);
        power *= z;
    }
    return sum;
}

// Pants group generators: tr A = 2 cosh(a1/2), tr B = 2 cosh(a2/2),
// tr AB = -2 cosh(a3/2).
struct PantsGroup {
    Mat2 a, b, c;  // c = (AB)^{-1}
};

inline PantsGroup pants_group(Real a1, Real a2, Real a3) {
    const Real e = std::exp(a1 / 2);
    const Real tr_b = 2 * std::cosh(a2 / 2);
    const Real tr_ab = -2 * std::cosh(a3 / 2);
    const Real p = (tr_ab - tr_b / e) / (e - 1 / e);
    const Real s = tr_b - p;
    Mat2 a;
    a << e, 0, 0, 1 / e;
    Mat2 b;
    b << p, 1, p * s - 1, s;
    return {a, b, (a * b).inverse()};
}

// Unit spacelike representative of the axis of a hyperbolic element.
inline Mat2 axis(const Mat2& m) {
    const Real half = m.trace() / 2;
    const Mat2 x = m - half * Mat2::Identity();
    return x / std::sqrt(half * half - 1);
}

// Distance between the (disjoint) axes of two hyperbolic elements.
inline Real axis_distance(const Mat2& m, const Mat2& n) {
    const Real c = std::abs((axis(m) * axis(n)).trace()) / 2;
    return std::log(c + std::sqrt((c - 1) * (c + 1)));
}

// Seam between boundaries 1 and 2, and the self-perpendicular of boundary 1
// (realized as the distance from axis(A) to axis(B A B^{-1})).
inline Real seam12(Real a1, Real a2, Real a3) {
    const auto g = pants_group(a1, a2, a3);
    return axis_distance(g.a, g.b);
}

inline Real self_perp1(Real a1, Real a2, Real a3) {
    const auto g = pants_group(a1, a2, a3);
    return axis_distance(g.a, g.b * g.a * g.b.inverse());
}

// Canonical primitive slopes (q >= 1, or 1/0) with max(|p|, q) <= n.
inline std::size_t primitive_slope_count(std::int64_t n) {
    std::size_t count = 1;  // 1/0
    for (std::int64_t q = 1; q <= n; ++q) {
        for (std::int64_t p = -n; p <= n; ++p) {
            if (std::gcd(p, q) == 1) ++count;
        }
    }
    return count;
}

inline std::int64_t totient(std::int64_t n) {
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        if (std::gcd(k, n) == 1) ++count;
    }
    return count;
}

// All traces reachable within `depth` Markov moves of (x, y, z), without
// pruning; every vertex of the tree is collected once per triangle visit.
inline void expand(Real x, Real y, Real z, int depth, int skip, std::vector<Real>& out) {
    if (depth == 0) return;
    const Real v[3] = {y * z - x, x * z - y, x * y - z};
    for (int i = 0; i < 3; ++i) {
        if (i == skip) continue;
        out.push_back(v[i]);
        Real t[3] = {x, y, z};
        t[i] = v[i];
        expand(t[0], t[1], t[2], depth - 1, i, out);
    }
}

inline std::vector<Real> tree_traces(Real x, Real y, Real z, int depth) {
    std::vector<Real> out{x, y, z};
    expand(x, y, z, depth, -1, out);
    return out;
}

}  // namespace oracle
