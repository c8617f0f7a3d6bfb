#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "surfid/errors.hpp"
#include "surfid/scc_enum.hpp"

using namespace surfid;

namespace {

std::vector<double> lengths_up_to(const std::vector<GeodesicRecord>& recs, double limit) {
    std::vector<double> out;
    for (const auto& r : recs) {
        if (r.length <= limit) out.push_back(r.length);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_same_spectrum(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= tol * std::max(1.0, a[i]));
}

}  // namespace

TEST_CASE("slopes are canonical and primitive") {
    CHECK(make_slope(-1, -2) == Slope{1, 2});
    CHECK(make_slope(-1, 0) == Slope{1, 0});
    CHECK(make_slope(3, -5) == Slope{-3, 5});
    CHECK_THROWS_AS(make_slope(2, 4), DomainError);
    CHECK_THROWS_AS(make_slope(0, 0), DomainError);
}

TEST_CASE("farey flips") {
    const Slope zero{0, 1}, inf{1, 0}, one{1, 1};
    CHECK(farey_flip(zero, inf, one) == Slope{-1, 1});
    CHECK(farey_flip(inf, one, zero) == Slope{2, 1});
    CHECK(farey_flip(zero, one, inf) == Slope{1, 2});
    CHECK(farey_flip(zero, Slope{-1, 1}, inf) == Slope{-1, 2});
    const Slope huge{INT64_MAX - 1, INT64_MAX};
    CHECK_THROWS_AS(farey_flip(huge, Slope{1, 1}, Slope{0, 1}), ResourceError);
}

TEST_CASE("markov child examples") {
    using P = TriplePosition;
    CHECK(markov_child(3, 3, 3, P::third) == std::array<double, 3>{3, 3, 6});
    CHECK(markov_child(3, 3, 6, P::second) == std::array<double, 3>{3, 15, 6});
    CHECK(markov_child(3, 3, 4, P::third) == std::array<double, 3>{3, 3, 5});
    const auto t = markov_child(make_triple(3, 3, 4), P::third);
    CHECK(t.kappa == -2.0);
}

TEST_CASE("reduce to minimal") {
    const auto a = reduce_to_minimal(make_triple(3, 3, 6));
    CHECK((a.x == 3 && a.y == 3 && a.z == 3));
    const auto b = reduce_to_minimal(make_triple(3, 15, 6));
    CHECK((b.x == 3 && b.y == 3 && b.z == 3));
    const auto c = reduce_to_minimal(make_triple(3, 3, 3));
    CHECK((c.x == 3 && c.y == 3 && c.z == 3));
}

TEST_CASE("reduction keeps the slope marking") {
    // (3, 15, 6): y carries 1/0; two reductions relabel, slopes follow.
    const auto m = reduce_to_minimal(initial_marking(make_triple(3, 15, 6)));
    std::set<Slope> slopes(m.slopes.begin(), m.slopes.end());
    CHECK(slopes.size() == 3);
    CHECK(slopes.count(Slope{0, 1}) == 1);
}

TEST_CASE("modular torus up to length 4") {
    const auto recs = enumerate(make_triple(3, 3, 3), 4.0);
    REQUIRE(recs.size() == 6);
    for (int i = 0; i < 3; ++i) {
        CHECK(recs[i].trace == 3.0);
        CHECK(recs[i].length == doctest::Approx(2 * std::acosh(1.5)));
    }
    for (int i = 3; i < 6; ++i) {
        CHECK(recs[i].trace == 6.0);
        CHECK(recs[i].length == doctest::Approx(2 * std::acosh(3.0)));
    }
    // exhaustive depth-3 expansion of the tree
    std::vector<double> ref;
    for (auto t : oracle::tree_traces(3, 3, 3, 3)) {
        if (2 * std::acosh(static_cast<double>(t) / 2) <= 4.0) ref.push_back(static_cast<double>(t));
    }
    CHECK(ref.size() == 6);
}

TEST_CASE("cutoff below the systole gives nothing") {
    CHECK(enumerate(make_triple(3, 3, 3), 1.9).empty());
    CHECK(enumerate(from_fenchel_nielsen({1.0, 0.2, 1.0}), 0.99).empty());
}

TEST_CASE("root choice does not change the spectrum") {
    const auto a = enumerate(make_triple(3, 3, 3), 15.0);
    const auto b = enumerate(make_triple(3, 3, 6), 15.0);
    check_same_spectrum(lengths_up_to(a, 15.0), lengths_up_to(b, 15.0), 1e-10);
}

TEST_CASE("pruned enumeration equals unpruned tree expansion") {
    for (const FenchelNielsen fn : {FenchelNielsen{1.0, 0.3, 1.5}, FenchelNielsen{2.2, 1.7, 0.4},
                                    FenchelNielsen{0.6, 0.0, 0.0}}) {
        const double cutoff = 9.0;
        const auto root = reduce_to_minimal(from_fenchel_nielsen(fn));
        auto filtered = [&](int depth) {
            std::vector<double> out;
            for (auto t : oracle::tree_traces(root.x, root.y, root.z, depth)) {
                const double len = 2 * std::acosh(static_cast<double>(t) / 2);
                if (len <= cutoff) out.push_back(len);
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        const auto ref = filtered(14);
        CHECK(ref == filtered(12));  // expansion has stabilized
        check_same_spectrum(lengths_up_to(enumerate(from_fenchel_nielsen(fn), cutoff), cutoff), ref, 1e-12);
    }
}

TEST_CASE("records are sorted with distinct slopes") {
    const auto recs = enumerate(from_fenchel_nielsen({0.8, 0.5, 2.0}), 14.0);
    std::set<Slope> seen;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(seen.insert(recs[i].slope).second);
        CHECK(recs[i].length == length_from_trace(recs[i].trace));
        if (i > 0) {
            const auto& a = recs[i - 1];
            const auto& b = recs[i];
            CHECK((a.length < b.length || (a.length == b.length && a.slope < b.slope)));
        }
    }
}

TEST_CASE("tree traces agree with word traces") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 5; ++i) {
        const double b = 0.5 + 2.5 * u(rng);
        const FenchelNielsen fn{b, b * u(rng), 0.2 + 3.8 * u(rng)};
        const auto recs = enumerate(from_fenchel_nielsen(fn), 30.0);
        int compared = 0;
        for (const auto& r : recs) {
            if (r.slope.q > 8 || std::abs(r.slope.p) > 50) continue;
            const double word = brute_force_trace(fn, r.slope);
            CHECK(std::abs(r.trace - word) <= 1e-9 * word);
            ++compared;
        }
        CHECK(compared > 20);
    }
}

TEST_CASE("word oracle on generators") {
    const FenchelNielsen fn{1.3, 0.4, 0.9};
    const auto t = from_fenchel_nielsen(fn);
    CHECK(brute_force_trace(fn, {0, 1}) == doctest::Approx(2 * std::cosh(0.65)).epsilon(1e-14));
    CHECK(brute_force_trace(fn, {1, 0}) == doctest::Approx(t.y).epsilon(1e-13));
    CHECK(brute_force_trace(fn, {1, 1}) == doctest::Approx(t.z).epsilon(1e-13));
    CHECK(brute_force_trace(fn, {-1, 1}) == doctest::Approx(t.x * t.y - t.z).epsilon(1e-12));
    CHECK_THROWS_AS(brute_force_trace(fn, {2, 4}), DomainError);
    CHECK_THROWS_AS(brute_force_trace(fn, {51, 1}), DomainError);
}

TEST_CASE("slope completeness at small denominators") {
    CHECK(1 + oracle::totient(1) + oracle::totient(2) + oracle::totient(3) + oracle::totient(4) +
              oracle::totient(5) ==
          11);
    const FenchelNielsen fn{1.1, 0.3, 1.0};
    for (std::int64_t n : {3, 5, 8}) {
        double longest = 0;
        std::set<Slope> expected;
        for (std::int64_t q = 0; q <= n; ++q) {
            for (std::int64_t p = -n; p <= n; ++p) {
                if (std::gcd(p, q) != 1) continue;
                const Slope s = make_slope(p, q);
                expected.insert(s);
                longest = std::max(longest, length_from_trace(brute_force_trace(fn, s)));
            }
        }
        CHECK(expected.size() == oracle::primitive_slope_count(n));
        std::set<Slope> got;
        for (const auto& r : enumerate(from_fenchel_nielsen(fn), longest + 0.5)) {
            if (std::max(std::abs(r.slope.p), r.slope.q) <= n) got.insert(r.slope);
        }
        CHECK(got == expected);
    }
}

TEST_CASE("kappa is conserved along the tree") {
    const auto t = from_fenchel_nielsen({0.9, 0.35, 1.7});
    std::vector<std::pair<MarkedTriple, int>> frontier{{initial_marking(t), -1}};
    double worst = 0;
    for (int depth = 0; depth < 10; ++depth) {
        std::vector<std::pair<MarkedTriple, int>> next;
        for (const auto& [m, created] : frontier) {
            for (int r = 0; r < 3; ++r) {
                if (r == created) continue;
                const auto c = flip(m, r);
                const auto& v = c.traces;
                const double scale = v[0] * v[1] * v[2];
                worst = std::max(worst, std::abs(markov_kappa(v[0], v[1], v[2]) - t.kappa) / scale);
                next.emplace_back(c, r);
            }
        }
        frontier = std::move(next);
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("pruning soundness") {
    for (const auto& t : {make_triple(3, 3, 3), from_fenchel_nielsen({0.7, 0.2, 2.5})}) {
        const double cutoff = 12.0;
        const auto small = enumerate(t, cutoff);
        std::vector<GeodesicRecord> big;
        for (const auto& r : enumerate(t, cutoff + 5)) {
            if (r.length <= cutoff) big.push_back(r);
        }
        REQUIRE(small.size() == big.size());
        for (std::size_t i = 0; i < small.size(); ++i) {
            CHECK(small[i].slope == big[i].slope);
            CHECK(small[i].trace == big[i].trace);
        }
    }
}

TEST_CASE("determinism") {
    const auto t = from_fenchel_nielsen({1.4, 0.9, 0.6});
    const auto a = enumerate(t, 16.0);
    const auto b = enumerate(t, 16.0);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].slope == b[i].slope);
        CHECK(std::memcmp(&a[i].trace, &b[i].trace, sizeof(double)) == 0);
    }
}

TEST_CASE("Dehn twist and reflection preserve the spectrum") {
    const double b = 1.2, t = 0.5, k = 1.3, cutoff = 14.0;
    const auto base = lengths_up_to(enumerate(from_fenchel_nielsen({b, t, k}), cutoff), cutoff - 1e-6);
    const auto twisted = lengths_up_to(enumerate(from_fenchel_nielsen({b, t + b, k}), cutoff), cutoff - 1e-6);
    const auto mirrored = lengths_up_to(enumerate(from_fenchel_nielsen({b, -t, k}), cutoff), cutoff - 1e-6);
    check_same_spectrum(base, twisted, 1e-10);
    check_same_spectrum(base, mirrored, 1e-10);
}

TEST_CASE("enumeration errors") {
    const auto t = make_triple(3, 3, 3);
    CHECK_THROWS_AS(enumerate(t, 0.0), DomainError);
    CHECK_THROWS_AS(enumerate(t, INFINITY), DomainError);
    CHECK_THROWS_AS(enumerate(t, 25.0, {.record_cap = 10}), ResourceError);
    CHECK_THROWS_AS(enumerate(TraceTriple{2.5, 2.5, 2.5, 0, 0}, 5.0), StructureError);
}
