#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace uvreg::quad {

using Function = std::function<double(double)>;

struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 1e-300;
    std::size_t max_evaluations = 1'000'000;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

struct PVResult {
    double principal_value = 0.0;
    // f_num(pole) / |f_den'(pole)|
    double residue_coefficient = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

// Globally adaptive Gauss-Kronrod (7/15) on [a, b].
QuadResult integrate_finite(const Function& f, double a, double b, const Options& opt = {});
QuadResult integrate_finite(const Function& f, double a, double b, double rel_tol);

// [a, inf) through x = a + scale * t / (1 - t). The integrand must decay;
// it is never evaluated at t = 1.
QuadResult integrate_semi_infinite(const Function& f, double a, const Options& opt = {}, double scale = 1.0);
QuadResult integrate_semi_infinite(const Function& f, double a, double rel_tol);

struct PVOptions {
    Options quad{};
    // Half width of the subtraction window around the pole; empty means the
    // whole [a, b] is subtracted.
    std::optional<double> window{};
    // f_den'(pole) when the caller knows it; otherwise a Richardson
    // extrapolated central difference is used.
    std::optional<double> den_slope{};
};

// PV of integral_a^b f_num/f_den where f_den has one simple zero at pole.
PVResult integrate_principal_value(const Function& f_num, const Function& f_den, double pole, double a, double b,
                                   const PVOptions& opt = {});
PVResult integrate_principal_value(const Function& f_num, const Function& f_den, double pole, double a, double b,
                                   double rel_tol);

// Bracketing root finder (TOMS 748). Bracket width on return is <= tol.
double find_root(const Function& f, double lo, double hi, double tol, std::size_t max_iterations = 200);

// Brent minimisation of a unimodal function; the argmin is accurate to
// max(tol, ~sqrt(eps)*|x|).
double minimize_scalar(const Function& f, double lo, double hi, double tol, std::size_t max_iterations = 500);

} // namespace uvreg::quad
