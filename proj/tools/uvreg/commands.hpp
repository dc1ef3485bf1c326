#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace uvreg::cli {

enum Exit : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_bad_arguments = 2,
    exit_no_convergence = 3,
    exit_io_error = 4,
};

enum class Level { fast, full };

struct Common {
    double tol = 1e-10;
    std::string format; // empty means the command's default
    std::uint64_t seed = 0xC0FFEE;
    std::size_t jobs = 0;
};

struct SweepArgs {
    double g_min = 1e-4;
    double g_max = 1e-1;
    std::size_t points = 10;
    std::string scale = "log";
    std::optional<double> lambda;
};

// Each command writes its report to out and returns an exit code. Library
// errors escape as exceptions; run_guarded maps them to exit codes.
int cmd_e0(double g, std::optional<double> lambda, const Common& c, std::ostream& out);
int cmd_e2(double g, std::optional<double> lambda, const Common& c, std::ostream& out);
int cmd_sweep(const SweepArgs& a, const Common& c, std::ostream& out, std::ostream& log);
int cmd_check(Level level, const Common& c, std::ostream& out);
int cmd_kernels(const std::vector<double>& ks, std::optional<double> lambda, std::optional<double> g,
                const Common& c, std::ostream& out);
int cmd_mass(double g, std::optional<double> lambda, const Common& c, std::ostream& out);
int cmd_pt(double p, double cutoff, double g, const Common& c, std::ostream& out);

int run_guarded(const std::function<int()>& body, std::ostream& err);

} // namespace uvreg::cli
