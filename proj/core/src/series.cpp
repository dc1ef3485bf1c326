#include "series.hpp"

#include "uvreg/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace uvreg::detail {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double series_limit = 2.0;
const double two_over_sqrt_pi = 2.0 / std::sqrt(std::numbers::pi);

// a_n = 2^n x^{2n+1} / (2n+1)!!, summed from n = 1 with weights w(n)
template <class W>
double erf_series(double x, W weight)
{
    double x2 = x * x;
    double a = x;
    double sum = 0.0;
    for (int n = 1; n < 500; ++n) {
        a *= 2.0 * x2 / (2 * n + 1);
        double term = weight(n) * a;
        sum += term;
        if (term <= eps * 0.25 * sum)
            break;
    }
    return sum;
}

// c_n = x^{2n+1} / n!, summed from n = 1 with weights w(n)
template <class W>
double erfi_series(double x, W weight)
{
    double x2 = x * x;
    double c = x;
    double sum = 0.0;
    for (int n = 1; n < 500; ++n) {
        c *= x2 / n;
        double term = weight(n) * c;
        sum += term;
        if (term <= eps * 0.25 * sum)
            break;
    }
    return sum;
}

Scaled with_gaussian(double x, double bracket) { return Scaled::from_log(1.0, x * x + std::log(bracket)); }

} // namespace

Scaled exp_erf(double x) { return specfun::erf_scaled_product(1.0, x); }

Scaled erf_excess(double x)
{
    if (x <= series_limit)
        return Scaled::from_double(erf_series(x, [](int) { return 1.0; }));
    return with_gaussian(x, 0.5 * std::sqrt(std::numbers::pi) * std::erf(x) - x * std::exp(-x * x));
}

Scaled erf_slope(double x)
{
    if (x <= series_limit)
        return Scaled::from_double(two_over_sqrt_pi * erf_series(x, [](int n) { return 2.0 * n; }));
    return with_gaussian(x, (2.0 * x * x - 1.0) * std::erf(x) + two_over_sqrt_pi * x * std::exp(-x * x));
}

Scaled erf_ratio_shift(double x)
{
    if (x <= series_limit) {
        if (x == 0.0)
            return {};
        return Scaled::from_double(two_over_sqrt_pi * erf_series(x, [](int) { return 1.0; }) / x);
    }
    return with_gaussian(x, std::erf(x) / x - two_over_sqrt_pi * std::exp(-x * x));
}

Scaled erfi_slope(double x)
{
    if (x <= series_limit)
        return Scaled::from_double(erfi_series(x, [](int n) { return 2.0 * n / (2 * n + 1); }));
    return with_gaussian(x, x - specfun::dawson(x));
}

Scaled erfi_ratio_shift(double x)
{
    if (x <= series_limit) {
        if (x == 0.0)
            return {};
        return Scaled::from_double(erfi_series(x, [](int n) { return 1.0 / (2 * n + 1); }) / x);
    }
    return with_gaussian(x, specfun::dawson(x) / x - std::exp(-x * x));
}

} // namespace uvreg::detail
