#pragma once

#include "uvreg/commands.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace uvreg::cli {

struct CheckLine {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
};

// Oracle and identity checks behind `uvreg check`. The full level adds the
// 1e7-sample Monte Carlo for J and the moving-particle mass fit.
std::vector<CheckLine> run_checks(Level level, std::uint64_t seed, double rel_tol);

} // namespace uvreg::cli
