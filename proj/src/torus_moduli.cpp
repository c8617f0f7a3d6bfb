#include "surfid/torus_moduli.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "surfid/errors.hpp"
#include "surfid/pants_trig.hpp"

namespace surfid {

namespace {

void require_hyperbolic(double tr, const char* fn) {
    if (!std::isfinite(tr) || !(tr > 2)) {
        throw StructureError(std::string(fn) + ": traces must be finite and > 2");
    }
}

// Rounding slack for kappa, relative to the magnitude of its summands.
double kappa_slack(double x, double y, double z) {
    const double scale = x * x + y * y + z * z + std::abs(x * y * z);
    return 64 * std::numeric_limits<double>::epsilon() * scale;
}

}  // namespace

double markov_kappa(double x, double y, double z) {
    // Extended precision keeps the cancellation between xyz and the squares
    // below the rounding of the inputs themselves.
    const long double lx = x, ly = y, lz = z;
    return static_cast<double>(lx * lx + ly * ly + lz * lz - lx * ly * lz);
}

double boundary_length(double x, double y, double z) {
    require_hyperbolic(x, "boundary_length");
    require_hyperbolic(y, "boundary_length");
    require_hyperbolic(z, "boundary_length");
    const double kappa = markov_kappa(x, y, z);
    if (kappa > kappa_slack(x, y, z)) {
        throw StructureError("boundary_length: kappa > 0, not a hyperbolic or cusped boundary");
    }
    if (kappa >= 0) return 0;
    return 2 * stable_acosh(1 - kappa / 2);
}

TraceTriple make_triple(double x, double y, double z) {
    const double k = boundary_length(x, y, z);
    return {x, y, z, markov_kappa(x, y, z), k};
}

TraceTriple from_traces(double x, double y, double k) {
    require_hyperbolic(x, "from_traces");
    require_hyperbolic(y, "from_traces");
    if (!std::isfinite(k) || k < 0) throw DomainError("from_traces: k must be finite and >= 0");
    // z^2 - xy z + c = 0
    const double c = x * x + y * y - 2 + 2 * std::cosh(k / 2);
    const double xy = x * y;
    const double disc = xy * xy - 4 * c;
    if (disc < 0) throw StructureError("from_traces: negative discriminant, no real structure");
    const double z = 2 * c / (xy + std::sqrt(disc));
    if (!(z > 2)) throw StructureError("from_traces: resulting z <= 2");
    return {x, y, z, markov_kappa(x, y, z), k};
}

namespace {

void require_fn(const FenchelNielsen& fn) {
    if (!std::isfinite(fn.b) || !(fn.b > 0)) throw DomainError("Fenchel-Nielsen length must be > 0");
    if (!std::isfinite(fn.t)) throw DomainError("Fenchel-Nielsen twist must be finite");
    if (!std::isfinite(fn.k) || fn.k < 0) throw DomainError("boundary length must be >= 0");
}

// Half-trace s of the symmetric generator B_0, fixed by the commutator trace.
double symmetric_half_trace(const FenchelNielsen& fn) {
    const double ch = std::cosh(fn.b / 2);
    const double sh = std::sinh(fn.b / 2);
    const double y2 = (4 * ch * ch + 2 * std::cosh(fn.k / 2) - 2) / (sh * sh);
    return std::sqrt(y2) / 2;
}

}  // namespace

GeneratorPair fenchel_nielsen_generators(const FenchelNielsen& fn) {
    require_fn(fn);
    const double s = symmetric_half_trace(fn);
    const double r = std::sqrt((s - 1) * (s + 1));
    Eigen::Matrix2d a = Eigen::Vector2d(std::exp(fn.b / 2), std::exp(-fn.b / 2)).asDiagonal();
    Eigen::Matrix2d b0;
    b0 << s, r, r, s;
    Eigen::Matrix2d twist = Eigen::Vector2d(std::exp(fn.t / 2), std::exp(-fn.t / 2)).asDiagonal();
    return {a, b0 * twist};
}

TraceTriple from_fenchel_nielsen(const FenchelNielsen& fn) {
    require_fn(fn);
    const double s = symmetric_half_trace(fn);
    const double x = 2 * std::cosh(fn.b / 2);
    const double y = 2 * s * std::cosh(fn.t / 2);
    const double z = 2 * s * std::cosh((fn.b + fn.t) / 2);
    return {x, y, z, markov_kappa(x, y, z), fn.k};
}

double length_from_trace(double trace) {
    require_hyperbolic(trace, "length_from_trace");
    return 2 * stable_acosh(trace / 2);
}

}  // namespace surfid
