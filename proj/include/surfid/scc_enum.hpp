#pragma once

// Simple closed geodesics of a one-holed torus.
//
// Essential simple closed curves are indexed by primitive slopes p/q. Three
// pairwise once-intersecting curves form a triangle of the Farey
// tessellation; crossing an edge replaces the opposite vertex by the other
// Farey combination of the edge's endpoints and its trace by the Markov move
// w -> uv - w. Away from a minimal triangle traces grow monotonically, which
// gives a pruned breadth-first enumeration by length.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "surfid/torus_moduli.hpp"

namespace surfid {

struct Slope {
    std::int64_t p = 0;
    std::int64_t q = 1;

    friend auto operator<=>(const Slope&, const Slope&) = default;
};

/// Canonical primitive slope: gcd(|p|, q) = 1 and q >= 1, or 1/0.
/// Throws DomainError for non-primitive input.
Slope make_slope(std::int64_t p, std::int64_t q);

struct GeodesicRecord {
    Slope slope;
    double trace = 0;
    double length = 0;
};

enum class TriplePosition { first = 1, second = 2, third = 3 };

std::array<double, 3> markov_child(double x, double y, double z, TriplePosition position);
TraceTriple markov_child(const TraceTriple& t, TriplePosition position);

/// Traces of a Farey triangle together with the slopes they belong to.
struct MarkedTriple {
    std::array<double, 3> traces;
    std::array<Slope, 3> slopes;
};

/// The initial marking: x, y, z carry slopes 0/1, 1/0, 1/1.
MarkedTriple initial_marking(const TraceTriple& t);

/// Third vertex of the Farey triangle across edge {a, b} from `removed`.
Slope farey_flip(const Slope& a, const Slope& b, const Slope& removed);

/// Applies the Markov move at `index` (0-based) to traces and slopes.
MarkedTriple flip(const MarkedTriple& m, std::size_t index);

/// Repeatedly lowers the largest trace by a Markov move until no move does.
TraceTriple reduce_to_minimal(const TraceTriple& t);
MarkedTriple reduce_to_minimal(const MarkedTriple& m);

struct EnumerateOptions {
    std::size_t record_cap = 10'000'000;
};

/// All simple closed geodesics of length <= length_cutoff, sorted by
/// (length, slope). Slopes are expressed in the marking of the input triple
/// (x ~ 0/1, y ~ 1/0, z ~ 1/1). Throws ResourceError past the record cap.
std::vector<GeodesicRecord> enumerate(const TraceTriple& t, double length_cutoff,
                                      const EnumerateOptions& options = {});

/// |tr W(p/q)| for the primitive word W in the Fenchel-Nielsen generators:
/// W(0/1) = A, W(1/0) = B, W(mediant) = W(left) W(right), negative slopes use
/// B^{-1}. Oracle scale only: |p|, q <= 50.
double brute_force_trace(const FenchelNielsen& fn, const Slope& slope);

}  // namespace surfid
