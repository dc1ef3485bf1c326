// One line per acceptance criterion; exits nonzero if any line fails.

#include "uvreg/kernels.hpp"
#include "uvreg/model.hpp"
#include "uvreg/second.hpp"
#include "uvreg/sweep.hpp"
#include "uvreg/zeroth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

using namespace uvreg;
using std::numbers::pi;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail)
{
    if (!pass)
        ++failures;
    std::printf("%s  %2d  %-28s %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
}

std::string num(double v) { return sweep::format_number(v); }

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

void alpha_constant()
{
    double a = zeroth::alpha_constant();
    double d = std::fabs(a - 0.736559);
    report(1, "alpha_constant", d <= 1e-4, "alpha=" + num(a) + " |diff|=" + num(d) + " tol=1e-4");
}

void variational_minimum()
{
    double target = std::sqrt(3.0 * pi) * (4.0 - std::sqrt(2.0)) / 2.0;
    double l = zeroth::lambda_opt(1e-6);
    double dl = rel(l, target);
    double g = 0.05;
    double e = zeroth::e0_weak(g, target);
    double de = rel(e, -g * g * std::pow(4.0 - std::sqrt(2.0), 2) / (32.0 * pi));
    report(2, "variational_minimum", dl <= 1e-6 && de <= 1e-10,
           "lambda_rel=" + num(dl) + " tol=1e-6 e0_rel=" + num(de) + " tol=1e-10");
}

void anchor_identity()
{
    double g = 0.3, worst = 0.0;
    for (double l : {1.0, zeroth::lambda_limit(), 8.0})
        worst = std::max(worst, rel(g * g * kernels::kernel_I(0.0, l).value(), zeroth::e0_weak(g, l)));
    report(3, "kernel_anchor_identity", worst <= 1e-8, "worst_rel=" + num(worst) + " tol=1e-8");
}

void small_k_law()
{
    // least squares of (I(k) - I(0))/k^2 = c + d k^2 over k <= 0.05 lambda
    double l = zeroth::lambda_limit();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (int i = 1; i <= 50; ++i) {
        double k = 0.05 * l * i / 50.0;
        double x = k * k, y = kernels::kernel_I_shift(k, l).value() / x;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    double c = (sy * sxx - sx * sxy) / (n * sxx - sx * sx);
    double claim = -1.0 / (18.0 * pi * pi);
    double d = rel(c, claim);
    report(4, "small_k_law", d <= 0.01, "coefficient=" + num(c) + " claim=" + num(claim) + " rel=" + num(d) + " tol=0.01");
}

void asymptotic_certification()
{
    double l = zeroth::lambda_limit();
    double worst[4] = {0, 0, 0, 0};
    for (double t : {6.0, 8.0, 10.0, 12.0, 16.0, 20.0}) {
        double k = t * l;
        auto dev = [](const Scaled& a, const Scaled& b) { return std::fabs((a / b).value() - 1.0); };
        worst[0] = std::max(worst[0], dev(kernels::kernel_I1_dot_k_asymptotic(k, l), kernels::kernel_I1_dot_k(k, l)));
        worst[1] = std::max(worst[1], dev(kernels::kernel_I2_asymptotic(k, l), kernels::kernel_I2(k, l)));
        worst[2] = std::max(worst[2], dev(kernels::kernel_I3_asymptotic(k, l), kernels::kernel_I3(k, l)));
        worst[3] = std::max(worst[3], dev(kernels::kernel_I_asymptotic(k, l), kernels::kernel_I(k, l)));
    }
    bool pass = *std::max_element(worst, worst + 4) <= 0.01;
    report(5, "asymptotic_certification", pass,
           "worst_dev kI1=" + num(worst[0]) + " I2=" + num(worst[1]) + " I3=" + num(worst[2]) + " I=" + num(worst[3]) +
               " tol=0.01");
}

void cutoff()
{
    double worst = 0.0, prev = INFINITY;
    bool monotone = true;
    std::string devs;
    for (double g : {1e-2, 1e-4, 1e-6}) {
        auto c = second::cutoff_k0(g, zeroth::lambda_opt(g));
        worst = std::max(worst, std::fabs(c.residual));
        double d = std::fabs(c.k0 / c.k0_asymptotic - 1.0);
        monotone = monotone && d < prev;
        prev = d;
        devs += " " + num(d);
    }
    report(6, "cutoff", worst < 1e-10 && monotone,
           "residual=" + num(worst) + " tol=1e-10 |k0/k0_asym-1|:" + devs);
}

void bracket_cancellation()
{
    double g = 0.1, worst = 0.0;
    for (double l : {1.0, zeroth::lambda_limit()})
        worst = std::max(worst, rel(second::analytic_bracket(g, l, 1e3 * l), zeroth::e0_weak(g, l)));
    report(7, "bracket_cancellation", worst <= 1e-6, "rel=" + num(worst) + " tol=1e-6");
}

void ratio_property()
{
    auto rows = sweep::run(sweep::grid(1e-4, 1e-1, 10, sweep::Scale::log), {}, {}, 0);
    double lo = INFINITY, hi = -INFINITY;
    bool ok = true;
    for (const auto& r : rows) {
        ok = ok && r.ok();
        lo = std::min(lo, r.ratio);
        hi = std::max(hi, r.ratio);
    }
    double variation = hi / lo - 1.0;
    report(8, "ratio_property", ok && lo >= 0.8 && hi <= 1.2 && variation < 0.15,
           "min=" + num(lo) + " max=" + num(hi) + " variation=" + num(variation) + " tol=0.15");
}

void imaginary_property()
{
    double worst = 0.0;
    std::string devs;
    for (double g : {1e-3, 1e-2, 1e-1}) {
        double l = zeroth::lambda_opt(g);
        auto x = second::e2_exact(g, l);
        double d = rel(std::fabs(x.e2.im), second::transition_half_rate(g, l));
        worst = std::max(worst, d);
        devs += " " + num(d);
    }
    report(9, "imaginary_property", worst <= 0.01, "rel:" + devs + " tol=0.01");
}

void singular_limit()
{
    double worst = 0.0, prev = INFINITY;
    bool monotone = true;
    std::string gaps;
    for (double g : {1e-2, 1e-4, 1e-6}) {
        double l = zeroth::lambda_opt(g);
        double k0 = second::cutoff_k0(g, l).k0;
        double s = second::e2_singular(g, k0);
        worst = std::max(worst, rel(s, model::pt_self_energy(0.0, k0, g)));
        double gap = std::fabs(second::e2_exact(g, l).e2.re - s) / (g * g);
        monotone = monotone && gap < prev;
        prev = gap;
        gaps += " " + num(gap);
    }
    report(10, "singular_limit", worst <= 4e-16 && monotone, "pt_rel=" + num(worst) + " gap/g^2:" + gaps);
}

void masses()
{
    double closed = (17.0 - std::sqrt(2.0)) / (189.0 * pi * pi);
    double c0 = zeroth::mass0_coefficient();
    double d_closed = std::fabs(c0 - closed);
    double fit = zeroth::mass0_fit(1.0, zeroth::lambda_limit()).coefficient;
    double d_fit = rel(fit, c0);
    double c_inf = 1.0 / (6.0 * pi * pi);
    double d_inf = rel(second::mass2_coefficient(1e4), c_inf);
    double ratio = c0 / c_inf;
    bool pass = d_closed <= 1e-12 && d_fit <= 1e-4 && d_inf <= 1e-6 && ratio >= 0.47 && ratio <= 0.52;
    report(11, "masses", pass,
           "closed=" + num(d_closed) + " fit_rel=" + num(d_fit) + " mass2_rel=" + num(d_inf) + " ratio=" + num(ratio));
}

void j_negligibility()
{
    double g = 0.1, l = zeroth::lambda_opt(g);
    second::Settings off;
    off.include_j = false;
    double d = rel(second::e2_exact(g, l).e2.re, second::e2_exact(g, l, off).e2.re);
    auto mc = kernels::kernel_J_oracle(0.0, 1.0, 10'000'000);
    double z = std::fabs(mc.value - kernels::kernel_J0_exact(1.0)) / mc.std_error;
    report(12, "j_negligibility", d < 5e-3 && z <= 3.0, "e2_rel=" + num(d) + " tol=0.005 mc_sigma=" + num(z) + " tol=3");
}

} // namespace

int main()
{
    alpha_constant();
    variational_minimum();
    anchor_identity();
    small_k_law();
    asymptotic_certification();
    cutoff();
    bracket_cancellation();
    ratio_property();
    imaginary_property();
    singular_limit();
    masses();
    j_negligibility();
    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
