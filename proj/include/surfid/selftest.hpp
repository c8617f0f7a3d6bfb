#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace surfid {

struct SelftestCheck {
    std::string name;
    std::size_t samples = 0;
    double max_residual = 0;
    double tolerance = 0;
    bool passed = false;
};

/// Dilogarithm functional equations, the four-holed-sphere reformulation
/// grid, the torus / four-holed-sphere covering grid and the word-oracle
/// comparison of enumerated traces. `seed` drives the random sample points.
std::vector<SelftestCheck> run_selftest(std::uint64_t seed);

}  // namespace surfid
