#include "surfid/scc_enum.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "surfid/errors.hpp"

namespace surfid {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw ResourceError("slope arithmetic overflow");
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) throw ResourceError("slope arithmetic overflow");
    return out;
}

std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

// Sign normalization only; primitivity is preserved by Farey moves.
Slope canonical(std::int64_t p, std::int64_t q) {
    if (q < 0 || (q == 0 && p < 0)) return {checked_neg(p), checked_neg(q)};
    return {p, q};
}

}  // namespace

Slope make_slope(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw DomainError("make_slope: 0/0 is not a slope");
    if (p == INT64_MIN || q == INT64_MIN) throw DomainError("make_slope: out of range");
    if (std::gcd(p, q) != 1) {
        throw DomainError("make_slope: " + std::to_string(p) + "/" + std::to_string(q) +
                          " is not primitive");
    }
    return canonical(p, q);
}

std::array<double, 3> markov_child(double x, double y, double z, TriplePosition position) {
    switch (position) {
        case TriplePosition::first:
            return {y * z - x, y, z};
        case TriplePosition::second:
            return {x, x * z - y, z};
        case TriplePosition::third:
            return {x, y, x * y - z};
    }
    throw DomainError("markov_child: invalid position");
}

TraceTriple markov_child(const TraceTriple& t, TriplePosition position) {
    const auto c = markov_child(t.x, t.y, t.z, position);
    return {c[0], c[1], c[2], markov_kappa(c[0], c[1], c[2]), t.k};
}

MarkedTriple initial_marking(const TraceTriple& t) {
    return {{t.x, t.y, t.z}, {Slope{0, 1}, Slope{1, 0}, Slope{1, 1}}};
}

Slope farey_flip(const Slope& a, const Slope& b, const Slope& removed) {
    const Slope sum = canonical(checked_add(a.p, b.p), checked_add(a.q, b.q));
    if (sum == removed) return canonical(checked_sub(a.p, b.p), checked_sub(a.q, b.q));
    return sum;
}

MarkedTriple flip(const MarkedTriple& m, std::size_t index) {
    const std::size_t i = (index + 1) % 3;
    const std::size_t j = (index + 2) % 3;
    MarkedTriple out = m;
    out.traces[index] = m.traces[i] * m.traces[j] - m.traces[index];
    out.slopes[index] = farey_flip(m.slopes[i], m.slopes[j], m.slopes[index]);
    return out;
}

namespace {

// A reducing move must beat the current maximum by more than rounding, so
// symmetric points (e.g. zero twist) cannot oscillate.
constexpr double kReduceRelTol = 1e-12;
constexpr int kReduceStepCap = 100'000;

}  // namespace

MarkedTriple reduce_to_minimal(const MarkedTriple& m) {
    MarkedTriple cur = m;
    for (int step = 0; step < kReduceStepCap; ++step) {
        const auto it = std::max_element(cur.traces.begin(), cur.traces.end());
        const auto idx = static_cast<std::size_t>(it - cur.traces.begin());
        const MarkedTriple next = flip(cur, idx);
        if (!(next.traces[idx] < cur.traces[idx] * (1 - kReduceRelTol))) return cur;
        cur = next;
    }
    throw ResourceError("reduce_to_minimal: step cap exceeded");
}

TraceTriple reduce_to_minimal(const TraceTriple& t) {
    const auto r = reduce_to_minimal(initial_marking(t));
    const auto& v = r.traces;
    return {v[0], v[1], v[2], markov_kappa(v[0], v[1], v[2]), t.k};
}

std::vector<GeodesicRecord> enumerate(const TraceTriple& t, double length_cutoff,
                                      const EnumerateOptions& options) {
    if (!std::isfinite(length_cutoff) || !(length_cutoff > 0)) {
        throw DomainError("enumerate: cutoff must be finite and positive");
    }
    // Validates the traces as well.
    (void)boundary_length(t.x, t.y, t.z);

    std::vector<GeodesicRecord> records;
    auto emit = [&](const Slope& s, double trace) {
        const double len = length_from_trace(trace);
        if (len > length_cutoff) return;
        if (records.size() >= options.record_cap) {
            throw ResourceError("enumerate: record cap of " + std::to_string(options.record_cap) +
                                " exceeded");
        }
        records.push_back({s, trace, len});
    };

    struct Node {
        MarkedTriple triangle;
        int created;  // index of the vertex new in this triangle, -1 at the root
    };

    const MarkedTriple root = reduce_to_minimal(initial_marking(t));
    for (std::size_t i = 0; i < 3; ++i) emit(root.slopes[i], root.traces[i]);

    std::deque<Node> queue{{root, -1}};
    while (!queue.empty()) {
        const Node node = queue.front();
        queue.pop_front();
        for (std::size_t r = 0; r < 3; ++r) {
            if (static_cast<int>(r) == node.created) continue;
            const MarkedTriple child = flip(node.triangle, r);
            const double fresh = child.traces[r];
            const double u = child.traces[(r + 1) % 3];
            const double v = child.traces[(r + 2) % 3];
            if (fresh >= u && fresh >= v && length_from_trace(fresh) > length_cutoff) continue;
            emit(child.slopes[r], fresh);
            queue.push_back({child, static_cast<int>(r)});
        }
    }

    std::sort(records.begin(), records.end(), [](const GeodesicRecord& a, const GeodesicRecord& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.slope < b.slope;
    });
    return records;
}

double brute_force_trace(const FenchelNielsen& fn, const Slope& slope) {
    const Slope s = make_slope(slope.p, slope.q);
    if (std::abs(s.p) > 50 || s.q > 50) throw DomainError("brute_force_trace: |p|, q must be <= 50");
    const GeneratorPair gens = fenchel_nielsen_generators(fn);
    const Eigen::Matrix2d a = gens.a;
    const Eigen::Matrix2d b = s.p < 0 ? Eigen::Matrix2d(gens.b.inverse()) : gens.b;
    const std::int64_t p = std::abs(s.p);
    const std::int64_t q = s.q;
    if (p == 0) return std::abs(a.trace());
    if (q == 0) return std::abs(b.trace());

    // Stern-Brocot descent towards p/q from 0/1 (word A) and 1/0 (word B).
    std::int64_t lp = 0, lq = 1, rp = 1, rq = 0;
    Eigen::Matrix2d left = a;
    Eigen::Matrix2d right = b;
    for (;;) {
        const std::int64_t mp = lp + rp;
        const std::int64_t mq = lq + rq;
        const Eigen::Matrix2d mid = left * right;
        if (mp == p && mq == q) return std::abs(mid.trace());
        // p/q < mp/mq
        if (p * mq < mp * q) {
            rp = mp;
            rq = mq;
            right = mid;
        } else {
            lp = mp;
            lq = mq;
            left = mid;
        }
    }
}

}  // namespace surfid
