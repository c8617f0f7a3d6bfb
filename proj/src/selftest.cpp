#include "surfid/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>

#include "surfid/dilog.hpp"
#include "surfid/identities.hpp"
#include "surfid/pants_trig.hpp"
#include "surfid/scc_enum.hpp"

namespace surfid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

class Check {
public:
    Check(std::string name, double tolerance) : result_{std::move(name), 0, 0, tolerance, true} {}

    void observe(double residual) {
        ++result_.samples;
        if (!std::isfinite(residual)) {
            result_.max_residual = residual;
            result_.passed = false;
            return;
        }
        result_.max_residual = std::max(result_.max_residual, std::abs(residual));
        if (std::abs(residual) > result_.tolerance) result_.passed = false;
    }

    SelftestCheck done() const { return result_; }

private:
    SelftestCheck result_;
};

constexpr int kSamples = 1000;

}  // namespace

std::vector<SelftestCheck> run_selftest(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<SelftestCheck> out;

    {
        Check c("dilog_special_values", 1e-13);
        c.observe(rogers_L(0.0));
        c.observe(rogers_L(0.5) - kPi2 / 12);
        c.observe(rogers_L(1.0) - kPi2 / 6);
        c.observe(rogers_L(-1.0) + kPi2 / 12);
        out.push_back(c.done());
    }
    {
        Check c("dilog_euler", 1e-12);
        for (int i = 0; i < kSamples; ++i) {
            const double x = unit(rng);
            c.observe(rogers_L(x) + rogers_L(1 - x) - kPi2 / 6);
        }
        out.push_back(c.done());
    }
    {
        Check c("dilog_inversion", 1e-12);
        for (int i = 0; i < kSamples; ++i) {
            const double x = std::exp(-20 + 40 * unit(rng));
            c.observe(rogers_L(-x) + rogers_L(-1 / x) + kPi2 / 6);
        }
        out.push_back(c.done());
    }
    {
        Check c("dilog_landen", 1e-12);
        for (int i = 0; i < kSamples; ++i) {
            const double x = unit(rng) * (1 - 1e-8);
            c.observe(rogers_L(-x / (1 - x)) + rogers_L(x));
        }
        out.push_back(c.done());
    }
    {
        Check c("dilog_pentagon", 1e-11);
        for (int i = 0; i < kSamples; ++i) {
            const double x = unit(rng);
            const double y = unit(rng);
            if (x <= 0 || y <= 0) continue;
            const double d = 1 - x * y;
            c.observe(rogers_L(x) + rogers_L(y) + rogers_L((1 - x) / d) + rogers_L((1 - y) / d) -
                      rogers_L(x * y) - kPi2 / 3);
        }
        out.push_back(c.done());
    }
    {
        Check c("foursphere_reformulation_grid", 1e-9);
        for (double cc : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            for (double a : {0.5, 1.0, 2.0, 5.0, 10.0}) {
                const auto o = foursphere_ortho(cc, a);
                c.observe(term_four_ortho(cc, o.m, o.p) - term_four_simple(cc, a));
            }
        }
        out.push_back(c.done());
    }
    {
        Check c("covering_correspondence_grid", 1e-10);
        for (int i = 0; i < 20; ++i) {
            for (int j = 0; j < 20; ++j) {
                const double cc = 0.1 + 4.9 * i / 19;
                const double a = 0.1 + 9.9 * j / 19;
                const auto four = foursphere_ortho(cc, a);
                const auto torus = torus_ortho(2 * cc, a / 2);
                c.observe(four.m - torus.m);
                c.observe(four.p - torus.q);
                c.observe(four.q - torus.p);
            }
        }
        out.push_back(c.done());
    }
    {
        Check c("enumeration_oracle", 1e-9);
        for (int i = 0; i < 5; ++i) {
            const double b = 0.5 + 2.5 * unit(rng);
            const FenchelNielsen fn{b, b * unit(rng), 0.2 + 3.8 * unit(rng)};
            std::map<Slope, double> expected;
            double longest = 0;
            for (std::int64_t q = 0; q <= 8; ++q) {
                for (std::int64_t p = -8; p <= 8; ++p) {
                    if (std::gcd(p, q) != 1) continue;
                    const Slope s = make_slope(p, q);
                    if (expected.count(s)) continue;
                    const double tr = brute_force_trace(fn, s);
                    expected[s] = tr;
                    longest = std::max(longest, length_from_trace(tr));
                }
            }
            const auto records = enumerate(from_fenchel_nielsen(fn), longest + 1);
            std::map<Slope, double> found;
            for (const auto& r : records) found[r.slope] = r.trace;
            for (const auto& [s, tr] : expected) {
                const auto it = found.find(s);
                c.observe(it == found.end() ? INFINITY : (it->second - tr) / tr);
            }
        }
        out.push_back(c.done());
    }
    return out;
}

}  // namespace surfid
