#pragma once

// Hyperbolic one-holed / once-punctured tori as points of the relative
// character variety: traces (x, y, z) = (tr A, tr B, tr AB) of a generating
// pair, with
//
//   kappa = x^2 + y^2 + z^2 - xyz = tr[A, B] + 2 = 2 - 2 cosh(k / 2)
//
// for boundary length k (k = 0 is a cusp).

#include <Eigen/Core>

namespace surfid {

struct TraceTriple {
    double x = 0;
    double y = 0;
    double z = 0;
    double kappa = 0;  // x^2 + y^2 + z^2 - xyz, evaluated from the stored traces
    double k = 0;      // boundary length

    friend bool operator==(const TraceTriple&, const TraceTriple&) = default;
};

/// Fenchel-Nielsen coordinates relative to a simple closed geodesic of
/// length b with twist t (length units) on a torus with boundary length k.
struct FenchelNielsen {
    double b = 0;
    double t = 0;
    double k = 0;
};

/// A generating pair (A, B) of SL(2, R) matrices realizing a structure.
struct GeneratorPair {
    Eigen::Matrix2d a;
    Eigen::Matrix2d b;
};

double markov_kappa(double x, double y, double z);

/// Boundary length from traces. Throws StructureError for kappa > 0 (beyond
/// rounding) or any trace <= 2.
double boundary_length(double x, double y, double z);

/// Triple from raw traces; k is derived via boundary_length.
TraceTriple make_triple(double x, double y, double z);

/// Solves the character-variety equation for the smaller root z.
TraceTriple from_traces(double x, double y, double k);

GeneratorPair fenchel_nielsen_generators(const FenchelNielsen& fn);

/// Traces (tr A, tr B_t, tr A B_t) of the generators above. t = 0 minimizes
/// tr B_t over the twist orbit and t -> t + b is a Markov move.
TraceTriple from_fenchel_nielsen(const FenchelNielsen& fn);

/// Geodesic length 2 arccosh(tr / 2) of a hyperbolic element.
double length_from_trace(double trace);

}  // namespace surfid
