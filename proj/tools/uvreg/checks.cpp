#include "uvreg/checks.hpp"

#include "uvreg/kernels.hpp"
#include "uvreg/model.hpp"
#include "uvreg/second.hpp"
#include "uvreg/specfun.hpp"
#include "uvreg/zeroth.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace uvreg::cli {

namespace {

using std::numbers::pi;

CheckLine absolute(std::string name, double measured, double expected, double tol)
{
    return {std::move(name), std::fabs(measured - expected) <= tol, measured, expected, tol};
}

CheckLine relative(std::string name, double measured, double expected, double tol)
{
    bool pass = std::fabs(measured - expected) <= tol * std::fabs(expected);
    return {std::move(name), pass, measured, expected, tol};
}

double central_difference(double (*f)(double, double), double k, double lambda)
{
    double h = 1e-4 * lambda;
    return (f(k + h, lambda) - f(k - h, lambda)) / (2.0 * h);
}

double i_value(double k, double lambda) { return kernels::kernel_I(k, lambda).value(); }

std::string tag(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

} // namespace

std::vector<CheckLine> run_checks(Level level, std::uint64_t seed, double rel_tol)
{
    std::vector<CheckLine> out;
    double l0 = zeroth::lambda_limit();

    out.push_back(absolute("alpha", zeroth::alpha_constant(), 0.736559, 1e-4));
    out.push_back(relative("lambda_opt_small_g", zeroth::lambda_opt(1e-4), l0, 1e-6));
    out.push_back(relative("e0_weak_at_optimum", zeroth::e0_weak(1.0, l0),
                           -std::pow(4.0 - std::sqrt(2.0), 2) / (32.0 * pi), 1e-10));
    out.push_back(absolute("dawson_1", specfun::dawson(1.0), 0.53807950691276841914, 1e-15));

    for (double l : {1.0, l0, 7.5})
        out.push_back(relative("I0_identity_lambda_" + tag(l),
                               kernels::kernel_I(0.0, l).value(), zeroth::e0_weak(1.0, l), 1e-8));

    for (double k : {0.5, l0, 3.0 * l0})
        out.push_back(relative("dI_finite_difference_k_" + tag(k),
                               kernels::kernel_I_derivative(k, l0).value(), central_difference(i_value, k, l0),
                               1e-6));
    out.push_back(relative("dJ_finite_difference", kernels::kernel_J_derivative(l0, l0),
                           central_difference(kernels::kernel_J, l0, l0), 1e-6));

    double ks = kernels::series_switch * l0;
    out.push_back(relative("I_series_switch_continuity", kernels::kernel_I_shift(ks * (1.0 - 1e-9), l0).value(),
                           kernels::kernel_I_shift(ks * (1.0 + 1e-9), l0).value(), 1e-8));

    std::size_t samples = level == Level::full ? 10'000'000 : 2'000'000;
    auto mc = kernels::kernel_J_oracle(0.0, 1.0, samples, seed);
    out.push_back(absolute("J0_monte_carlo_3sigma", mc.value, kernels::kernel_J0_exact(1.0), 3.0 * mc.std_error));

    second::Settings s;
    s.rel_tol = rel_tol;
    double g = 1e-3;
    double lg = zeroth::lambda_opt(g);
    auto cut = second::cutoff_k0(g, lg, s);
    out.push_back(absolute("cutoff_residual", cut.residual, 0.0, 1e-10));
    out.push_back(absolute("singular_limit_is_pt", second::e2_singular(g, cut.k0),
                           model::pt_self_energy(0.0, cut.k0, g), 0.0));
    auto ex = second::e2_exact(g, lg, s);
    out.push_back(relative("im_e2_vs_half_rate", std::fabs(ex.e2.im), second::transition_half_rate(g, lg, cut.k0),
                           1e-2));
    out.push_back(absolute("e2_over_analytic", ex.e2.re / second::e2_analytic(g, lg, cut.k0), 1.0, 0.2));
    out.push_back(relative("mass2_coefficient_limit", second::mass2_coefficient(1e12), 1.0 / (6.0 * pi * pi), 1e-6));

    if (level == Level::full) {
        auto fit = zeroth::mass0_fit(1.0, l0);
        out.push_back(relative("mass0_fit", fit.coefficient, zeroth::mass0_coefficient(), 1e-4));
    }
    return out;
}

} // namespace uvreg::cli
