#pragma once

// Test-only references built without the library's own quadrature or
// special functions: Boost Gauss-Kronrod in long double and plain series.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace oracle {

using real = long double;
inline constexpr real pi = std::numbers::pi_v<long double>;

template <class F>
real integrate(F f, real a, real b, real tol = 1e-17L)
{
    return boost::math::quadrature::gauss_kronrod<real, 61>::integrate(f, a, b, 15, tol);
}

template <class F>
real integrate_to_infinity(F f, real a)
{
    return boost::math::quadrature::gauss_kronrod<real, 61>::integrate(
        f, a, std::numeric_limits<real>::infinity(), 15, 1e-17L);
}

inline real erf_series(real x)
{
    real term = x, sum = x;
    for (int n = 1; n < 200; ++n) {
        term *= -x * x / n;
        real add = term / (2 * n + 1);
        sum += add;
        if (std::fabs(add) < 1e-22L * std::fabs(sum))
            break;
    }
    return 2 / std::sqrt(pi) * sum;
}

// sum x^(2n+1) / (n! (2n+1)) = (sqrt(pi)/2) erfi(x)
inline real erfi_half_series(real x)
{
    real term = x, sum = x;
    for (int n = 1; n < 400; ++n) {
        term *= x * x / n;
        real add = term / (2 * n + 1);
        sum += add;
        if (add < 1e-22L * sum)
            break;
    }
    return sum;
}

// sum (-1)^n 2^n x^(2n+1) / (2n+1)!!
inline real dawson_series(real x)
{
    real term = x, sum = x;
    for (int n = 1; n < 400; ++n) {
        term *= -2 * x * x / (2 * n + 1);
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum))
            break;
    }
    return sum;
}

// e^{-x^2} int_0^x e^{t^2} dt written as int_0^x e^{(t-x)(t+x)} dt
inline real dawson_quadrature(real x)
{
    return integrate([x](real t) { return std::exp((t - x) * (t + x)); }, 0, x);
}

// Radial m-integrals of the three kernel sums after the angular integration.
// Hyperbolic factors are folded into the Gaussian so nothing overflows.
inline real kI1_radial(real k, real l)
{
    auto f = [k, l](real m) -> real {
        if (m == 0)
            return 0;
        real a = 2 * k * m / (l * l);
        real g = -1.5L * m * m / (l * l);
        real s;
        if (a < 0.1L) {
            // sinh a - a cosh a = -sum 2n a^(2n+1)/(2n+1)!
            real term = a, sum = 0;
            for (int n = 1; n < 30; ++n) {
                term *= a * a / ((2 * n) * (2 * n + 1));
                sum -= 2 * n * term;
            }
            s = sum * std::exp(g);
        } else {
            s = ((1 - a) * std::exp(g + a) - (1 + a) * std::exp(g - a)) / 2;
        }
        return l * l * l * l * s / (2 * k * m * m);
    };
    return integrate_to_infinity(f, 0) / (8 * pi * pi);
}

inline real I2_radial(real k, real l)
{
    auto f = [k, l](real m) -> real {
        real a = 2 * k * m / (l * l);
        real g = -1.5L * m * m / (l * l);
        real shc = a < 1e-8L ? std::exp(g) : (std::exp(g + a) - std::exp(g - a)) / (2 * a);
        return (1 + m / 2) * shc * 2 / (l * l);
    };
    return l * l / (8 * pi * pi) * integrate_to_infinity(f, 0);
}

inline real I3_radial(real k, real l)
{
    auto f = [k, l](real m) -> real {
        real b = k * m / (l * l);
        real g = -0.75L * m * m / (l * l);
        real shc = b < 1e-8L ? std::exp(g) : (std::exp(g + b) - std::exp(g - b)) / (2 * b);
        return shc / (l * l);
    };
    return -l * l / (2 * pi * pi) * integrate_to_infinity(f, 0);
}

// k^2 coefficients of the three radial forms
inline real I_quadratic_radial(real l)
{
    real c1 = -1 / (18 * pi * pi);
    real c2 = l * l / (8 * pi * pi) *
              integrate_to_infinity([l](real m) { return (1 + m / 2) * std::exp(-1.5L * m * m / (l * l)) * 2 / (l * l) * 4 * m * m / (6 * l * l * l * l); }, 0);
    real c3 = -l * l / (2 * pi * pi) *
              integrate_to_infinity([l](real m) { return std::exp(-0.75L * m * m / (l * l)) / (l * l) * m * m / (6 * l * l * l * l); }, 0);
    return c1 + c2 + c3;
}

} // namespace oracle
