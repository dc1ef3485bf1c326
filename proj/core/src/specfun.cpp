#include "uvreg/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace uvreg::specfun {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// Below this the positive power series for exp(x^2) D(x) is used, above it
// the asymptotic expansion. At 6 the smallest asymptotic term is ~e^-36.
constexpr double dawson_switch = 6.0;

// sum_{n>=0} x^{2n+1} / (n! (2n+1)); every term positive.
double erfi_integral_series(double x)
{
    double x2 = x * x;
    double p = x; // x^{2n+1}/n!
    double sum = x;
    for (int n = 1; n < 2000; ++n) {
        p *= x2 / n;
        double term = p / (2 * n + 1);
        sum += term;
        if (term < eps * 0.25 * sum)
            break;
    }
    return sum;
}

double dawson_asymptotic(double x)
{
    double inv = 1.0 / (2.0 * x * x);
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 200; ++n) {
        double next = term * (2 * n - 1) * inv;
        if (next > term)
            break;
        term = next;
        sum += term;
        if (term < eps * 0.25 * sum)
            break;
    }
    return sum / (2.0 * x);
}

} // namespace

double erf(double x) { return std::erf(x); }

double dawson(double x)
{
    if (x < 0.0)
        return -dawson(-x);
    if (x == 0.0)
        return 0.0;
    if (x < dawson_switch)
        return std::exp(-x * x) * erfi_integral_series(x);
    return dawson_asymptotic(x);
}

Scaled erfi_integral(double x)
{
    if (x < 0.0)
        return -erfi_integral(-x);
    if (x == 0.0)
        return {};
    if (x < dawson_switch)
        return Scaled::from_double(erfi_integral_series(x));
    return Scaled::from_log(1.0, x * x + std::log(dawson_asymptotic(x)));
}

Scaled erf_scaled_product(double a, double x)
{
    if (x == 0.0)
        return {};
    double e = std::erf(x);
    return Scaled::from_log(e > 0 ? 1.0 : -1.0, a * x * x + std::log(std::fabs(e)));
}

} // namespace uvreg::specfun
