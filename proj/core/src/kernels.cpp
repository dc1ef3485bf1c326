#include "uvreg/kernels.hpp"

#include "series.hpp"
#include "uvreg/errors.hpp"
#include "uvreg/specfun.hpp"
#include "uvreg/zeroth.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace uvreg::kernels {

using std::numbers::pi;

namespace {

const double sqrt_pi = std::sqrt(pi);
const double pi32 = pi * sqrt_pi;
const double sqrt6 = std::sqrt(6.0);
const double sqrt3 = std::sqrt(3.0);

void require_positive(double k, const char* what)
{
    if (!(k > 0.0))
        throw DomainError(std::string(what) + " requires k > 0");
}

void require_lambda(double lambda)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw DomainError("lambda must be finite and positive");
}

double arg_x(double k, double lambda) { return std::sqrt(2.0 / 3.0) * k / lambda; }
double arg_y(double k, double lambda) { return k / (sqrt3 * lambda); }

// Small-k polynomials, shift = c2 k^2 + c4 k^4 for each component. They
// come from the leading two terms of the positive series in series.hpp:
//   erf_excess(x)/x = 2x^2/3 + 4x^4/15,  erfi_ratio_shift(x) = x^2/3 + x^4/10
struct Taylor {
    double c2, c4;
    double at(double k) const { return k * k * (c2 + c4 * k * k); }
    double slope(double k) const { return k * (2.0 * c2 + 4.0 * c4 * k * k); }
};

Taylor taylor_I1k(double lambda)
{
    double l2 = lambda * lambda;
    // -(l^2/8pi^2)(2x^2/3 + 4x^4/15), x^2 = 2k^2/(3 l^2)
    double p = -l2 / (8.0 * pi * pi);
    return {p * (2.0 / 3.0) * (2.0 / (3.0 * l2)), p * (4.0 / 15.0) * std::pow(2.0 / (3.0 * l2), 2)};
}

Taylor taylor_I2(double lambda)
{
    double l2 = lambda * lambda;
    double c = std::sqrt(2.0 / 3.0) / lambda;
    double ax = 2.0 / (3.0 * l2);
    double p = l2 / (96.0 * pi * pi) * c;
    double e = std::sqrt(6.0 * pi) * lambda * 2.0 / sqrt_pi; // times (2x^2/3 + 4x^4/15)
    double f = 12.0 * sqrt_pi;                                 // times (x^2/3 + x^4/10)
    return {p * (e * 2.0 / 3.0 + f / 3.0) * ax, p * (e * 4.0 / 15.0 + f / 10.0) * ax * ax};
}

Taylor taylor_I3(double lambda)
{
    double ay = 1.0 / (3.0 * lambda * lambda);
    double p = -lambda / (2.0 * sqrt3 * pi32);
    return {p * ay / 3.0, p * ay * ay / 10.0};
}

double I2_at_zero(double lambda)
{
    return lambda * lambda / (96.0 * pi * pi) * (4.0 + 12.0 * sqrt_pi * std::sqrt(2.0 / 3.0) / lambda);
}

double I3_at_zero(double lambda) { return -lambda / (2.0 * sqrt3 * pi32); }

bool small(double k, double lambda) { return k < series_switch * lambda; }

} // namespace

KernelValue kernel_I1_dot_k(double k, double lambda)
{
    require_lambda(lambda);
    require_positive(k, "kernel_I1_dot_k");
    if (small(k, lambda))
        return Scaled::from_double(taylor_I1k(lambda).at(k));
    double x = arg_x(k, lambda);
    return detail::erf_excess(x) * (-sqrt6 * std::pow(lambda, 3) / (16.0 * pi * pi * k));
}

KernelValue kernel_I2(double k, double lambda)
{
    require_lambda(lambda);
    require_positive(k, "kernel_I2");
    if (small(k, lambda))
        return Scaled::from_double(I2_at_zero(lambda) + taylor_I2(lambda).at(k));
    double x = arg_x(k, lambda);
    Scaled sum = detail::exp_erf(x) * (std::sqrt(6.0 * pi) * lambda) + specfun::erfi_integral(x) * (12.0 * sqrt_pi);
    return sum * (lambda * lambda / (96.0 * pi * pi * k));
}

KernelValue kernel_I3(double k, double lambda)
{
    require_lambda(lambda);
    require_positive(k, "kernel_I3");
    if (small(k, lambda))
        return Scaled::from_double(I3_at_zero(lambda) + taylor_I3(lambda).at(k));
    return specfun::erfi_integral(arg_y(k, lambda)) * (-lambda * lambda / (2.0 * pi32 * k));
}

KernelValue kernel_I(double k, double lambda)
{
    require_lambda(lambda);
    if (!(k >= 0.0))
        throw DomainError("kernel_I requires k >= 0");
    if (small(k, lambda))
        return Scaled::from_double(I2_at_zero(lambda) + I3_at_zero(lambda)) + kernel_I_shift(k, lambda);
    return kernel_I1_dot_k(k, lambda) + kernel_I2(k, lambda) + kernel_I3(k, lambda);
}

KernelValue kernel_I_shift(double k, double lambda)
{
    require_lambda(lambda);
    if (!(k >= 0.0))
        throw DomainError("kernel_I_shift requires k >= 0");
    if (k == 0.0)
        return {};
    if (small(k, lambda))
        return Scaled::from_double(taylor_I1k(lambda).at(k) + taylor_I2(lambda).at(k) + taylor_I3(lambda).at(k));
    double x = arg_x(k, lambda);
    double y = arg_y(k, lambda);
    double l2 = lambda * lambda;
    double c = std::sqrt(2.0 / 3.0) / lambda;
    Scaled i1 = detail::erf_excess(x) * (-sqrt6 * l2 * lambda / (16.0 * pi * pi * k));
    Scaled i2 = (detail::erf_ratio_shift(x) * (std::sqrt(6.0 * pi) * lambda) +
                 detail::erfi_ratio_shift(x) * (12.0 * sqrt_pi)) *
                (l2 / (96.0 * pi * pi) * c);
    Scaled i3 = detail::erfi_ratio_shift(y) * (-l2 / (2.0 * pi32 * sqrt3 * lambda));
    return i1 + i2 + i3;
}

KernelValue kernel_I_derivative(double k, double lambda)
{
    require_lambda(lambda);
    require_positive(k, "kernel_I_derivative");
    if (small(k, lambda))
        return Scaled::from_double(taylor_I1k(lambda).slope(k) + taylor_I2(lambda).slope(k) +
                                   taylor_I3(lambda).slope(k));
    double x = arg_x(k, lambda);
    double y = arg_y(k, lambda);
    double l2 = lambda * lambda;
    double k2 = k * k;
    Scaled te = detail::erf_slope(x);
    Scaled d1 = te * (-l2 * lambda * std::sqrt(6.0 * pi) / (32.0 * pi * pi * k2));
    Scaled d2 = (te * (std::sqrt(6.0 * pi) * lambda) + detail::erfi_slope(x) * (12.0 * sqrt_pi)) *
                (l2 / (96.0 * pi * pi * k2));
    Scaled d3 = detail::erfi_slope(y) * (-l2 / (2.0 * pi32 * k2));
    return d1 + d2 + d3;
}

KernelValue kernel_I1_dot_k_asymptotic(double k, double lambda)
{
    require_lambda(lambda);
    require_positive(k, "kernel_I1_dot_k_asymptotic");
    double x = arg_x(k, lambda);
    double bracket = std::sqrt(6.0 * pi) * lambda - 4.0 * k * std::exp(-x * x);
    return scaled_exp(x * x) * (-lambda * lambda * bracket / (32.0 * pi * pi * k));
}

KernelValue kernel_I2_asymptotic(double k, double lambda)
{
    require_lambda(lambda);
    require_positive(k, "kernel_I2_asymptotic");
    double x = arg_x(k, lambda);
    return scaled_exp(x * x) * (std::pow(lambda, 3) * sqrt6 * (3.0 + k) / (96.0 * pi32 * k * k));
}

KernelValue kernel_I3_asymptotic(double k, double lambda)
{
    require_lambda(lambda);
    require_positive(k, "kernel_I3_asymptotic");
    double y = arg_y(k, lambda);
    return scaled_exp(y * y) * (-std::pow(lambda, 3) * sqrt3 / (4.0 * pi32 * k * k));
}

KernelValue kernel_I_asymptotic(double k, double lambda)
{
    require_lambda(lambda);
    require_positive(k, "kernel_I_asymptotic");
    double x = arg_x(k, lambda);
    return scaled_exp(x * x) * (-std::pow(lambda, 3) * std::sqrt(6.0 * pi) / (48.0 * pi * pi * k));
}

KernelValue kernel_I_asymptotic_derivative(double k, double lambda)
{
    return kernel_I_asymptotic(k, lambda) * (4.0 * k / (3.0 * lambda * lambda) - 1.0 / k);
}

namespace {

double j_prefactor(double lambda) { return std::sqrt(5.0) * lambda * lambda / (4.0 * std::pow(2.0 * pi, 3) * 243.0); }

} // namespace

double kernel_J(double k, double lambda) { return kernel_J_scaled(k, lambda).value(); }

KernelValue kernel_J_scaled(double k, double lambda)
{
    require_lambda(lambda);
    if (!(k >= 0.0))
        throw DomainError("kernel_J requires k >= 0");
    double r = k * k / (lambda * lambda);
    double poly = 2.0 * r / 15.0 - 1.0;
    double den = 1.0 + 4.0 * r / 45.0;
    return Scaled::from_log(poly, 0.8 * r + std::log(std::fabs(poly)) - 3.0 * std::log(den)) * j_prefactor(lambda);
}

double kernel_J_derivative(double k, double lambda) { return kernel_J_derivative_scaled(k, lambda).value(); }

KernelValue kernel_J_derivative_scaled(double k, double lambda)
{
    require_lambda(lambda);
    double l2 = lambda * lambda;
    double r = k * k / l2;
    double poly = 2.0 * r / 15.0 - 1.0;
    double den = 1.0 + 4.0 * r / 45.0;
    double bracket = 0.8 * poly + 2.0 / 15.0 - 3.0 * (4.0 / 45.0) * poly / den;
    return Scaled::from_log(bracket, 0.8 * r - 3.0 * std::log(den) + std::log(std::fabs(bracket))) *
           (j_prefactor(lambda) * 2.0 * k / l2);
}

double kernel_J0_exact(double lambda)
{
    require_lambda(lambda);
    return -lambda * lambda * zeroth::alpha_constant() / (256.0 * std::pow(pi, 4));
}

McEstimate kernel_J_oracle(double k, double lambda, std::size_t samples, std::uint64_t seed)
{
    require_lambda(lambda);
    if (!(k >= 0.0))
        throw DomainError("kernel_J_oracle requires k >= 0");
    if (samples < 100000)
        throw DomainError("kernel_J_oracle needs at least 1e5 samples");

    // |l| and |m| are drawn from the half-normal exp(-l^2/2 lambda^2) carried
    // by |u|^2 after the d^3l/l^2 measure; directions are uniform. What is
    // left is (l^.m^) phi^2_{l+m+k}/phi^2_k.
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> radial(0.0, lambda);
    std::normal_distribution<double> unit(0.0, 1.0);
    auto direction = [&](double out[3]) {
        double n = 0.0;
        do {
            for (int i = 0; i < 3; ++i)
                out[i] = unit(rng);
            n = std::sqrt(out[0] * out[0] + out[1] * out[1] + out[2] * out[2]);
        } while (n == 0.0);
        for (int i = 0; i < 3; ++i)
            out[i] /= n;
    };

    double l2 = lambda * lambda;
    double mean = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        double a[3], b[3];
        double la = std::fabs(radial(rng));
        direction(a);
        double lb = std::fabs(radial(rng));
        direction(b);
        double s[3] = {la * a[0] + lb * b[0], la * a[1] + lb * b[1], la * a[2] + lb * b[2]};
        double shift = s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + 2.0 * k * s[2];
        double w = (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) * std::exp(-shift / l2);
        double delta = w - mean;
        mean += delta / double(i + 1);
        m2 += delta * (w - mean);
    }
    double norm = l2 / (64.0 * pi * pi * pi);
    McEstimate out;
    out.samples = samples;
    out.value = norm * mean;
    out.std_error = norm * std::sqrt(m2 / double(samples - 1) / double(samples));
    return out;
}

} // namespace uvreg::kernels
