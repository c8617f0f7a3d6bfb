#pragma once

// Hyperbolic trigonometry of pairs of pants (three-holed spheres).
//
// A pants with boundary lengths (a1, a2, a3) is the double of a right-angled
// hexagon with alternate sides a1/2, a2/2, a3/2. The remaining sides are the
// seams m_i (boundary j to boundary k). The self-perpendicular d_i of
// boundary i crosses seam m_i at right angles and splits each hexagon into two
// right-angled pentagons; the pentagon relation cosh(s) = sinh(s') sinh(s'')
// for the two sides s', s'' not adjacent to s gives
//
//   sinh^2(d_i / 2) = (c_j^2 + c_k^2 + 2 c_j c_k cosh(a_i / 2)) / sinh^2(a_i / 2)
//
// with c_j = cosh(a_j / 2).

#include <array>
#include <cmath>
#include <concepts>
#include <string>

#include "surfid/errors.hpp"

namespace surfid {

inline constexpr double kMinBoundaryLength = 1e-12;

/// arccosh in the form log(x + sqrt((x - 1)(x + 1))), accurate near x = 1.
template <std::floating_point Scalar>
Scalar stable_acosh(Scalar x) {
    if (!(x >= 1)) throw DomainError("stable_acosh: argument must be >= 1");
    return std::log(x + std::sqrt((x - 1) * (x + 1)));
}

template <std::floating_point Scalar>
struct PantsGeometry {
    std::array<Scalar, 3> boundary;  // a_i
    std::array<Scalar, 3> seam;      // m_i: between boundaries j and k
    std::array<Scalar, 3> self_perp; // d_i: from boundary i to itself
};

/// Simple orthogeodesic lengths attached to one curve of a four-holed sphere
/// or one-holed torus: m (boundary to curve), p and q as labelled by the
/// callers below.
template <std::floating_point Scalar>
struct OrthoLengths {
    Scalar m;
    Scalar p;
    Scalar q;
};

namespace detail {

template <std::floating_point Scalar>
void require_length(Scalar v, const char* fn) {
    if (!std::isfinite(v) || v < Scalar(kMinBoundaryLength)) {
        throw DomainError(std::string(fn) + ": lengths must be finite and positive");
    }
}

}  // namespace detail

template <std::floating_point Scalar>
PantsGeometry<Scalar> pants_geometry(Scalar a1, Scalar a2, Scalar a3) {
    detail::require_length(a1, "pants_geometry");
    detail::require_length(a2, "pants_geometry");
    detail::require_length(a3, "pants_geometry");
    PantsGeometry<Scalar> g{{a1, a2, a3}, {}, {}};
    std::array<Scalar, 3> ch{}, sh{};
    for (int i = 0; i < 3; ++i) {
        ch[i] = std::cosh(g.boundary[i] / 2);
        sh[i] = std::sinh(g.boundary[i] / 2);
    }
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        g.seam[i] = stable_acosh((ch[i] + ch[j] * ch[k]) / (sh[j] * sh[k]));
        const Scalar num = ch[j] * ch[j] + ch[k] * ch[k] + 2 * ch[j] * ch[k] * ch[i];
        g.self_perp[i] = 2 * std::asinh(std::sqrt(num) / sh[i]);
    }
    return g;
}

/// Orthogeodesics of the pants (c, c, a) cut from a four-holed sphere with
/// all boundaries of length c along a curve of length a.
///   m: a length-c boundary to the length-a curve
///   p: the length-a curve to itself
///   q: between the two length-c boundaries
template <std::floating_point Scalar>
OrthoLengths<Scalar> foursphere_ortho(Scalar c, Scalar a) {
    detail::require_length(c, "foursphere_ortho");
    detail::require_length(a, "foursphere_ortho");
    const auto g = pants_geometry(c, c, a);
    return {g.seam[1], g.self_perp[2], g.seam[2]};
}

/// Orthogeodesics of a one-holed torus with boundary length k cut along a
/// simple closed geodesic of length b, i.e. of the pants (k, b, b).
///   m: the boundary to the curve
///   p: the boundary to itself, disjoint from the curve
///   q: the curve to itself, crossing from one side to the other
template <std::floating_point Scalar>
OrthoLengths<Scalar> torus_ortho(Scalar k, Scalar b) {
    detail::require_length(k, "torus_ortho");
    detail::require_length(b, "torus_ortho");
    const auto g = pants_geometry(k, b, b);
    return {g.seam[2], g.self_perp[0], g.seam[0]};
}

/// The unique t > 0 with sinh(t) sinh(half_param) = 1. Pass c/2 for the
/// four-holed sphere bound on m_A, k/4 for the torus bound on m_B.
template <std::floating_point Scalar>
Scalar guard_threshold(Scalar half_param) {
    if (!(half_param > 0)) throw DomainError("guard_threshold: argument must be positive");
    return std::asinh(1 / std::sinh(half_param));
}

}  // namespace surfid
