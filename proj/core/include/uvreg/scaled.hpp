#pragma once

#include <cmath>
#include <numbers>

namespace uvreg {

// value = mantissa * exp(log_scale), with |mantissa| in [1, e) or the value
// exactly zero. log_scale is kept integral so renormalisation is cheap.
struct Scaled {
    double mantissa = 0.0;
    double log_scale = 0.0;

    static Scaled from_double(double v) { return normalized(v, 0.0); }

    // sign * exp(log_abs)
    static Scaled from_log(double sign, double log_abs)
    {
        if (sign == 0.0 || log_abs == -INFINITY)
            return {};
        double l = std::floor(log_abs);
        return normalized(std::copysign(std::exp(log_abs - l), sign), l);
    }

    static Scaled normalized(double m, double l)
    {
        if (m == 0.0 || !std::isfinite(m))
            return m == 0.0 ? Scaled{} : Scaled{m, l};
        double shift = std::floor(std::log(std::fabs(m)));
        if (shift != 0.0) {
            m *= std::exp(-shift);
            l += shift;
        }
        // exp/log rounding can leave the mantissa a hair outside [1, e)
        while (std::fabs(m) >= std::numbers::e) {
            m /= std::numbers::e;
            l += 1.0;
        }
        while (std::fabs(m) < 1.0) {
            m *= std::numbers::e;
            l -= 1.0;
        }
        return {m, l};
    }

    bool is_zero() const { return mantissa == 0.0; }
    int sign() const { return (mantissa > 0.0) - (mantissa < 0.0); }
    double log_abs() const { return is_zero() ? -INFINITY : std::log(std::fabs(mantissa)) + log_scale; }
    double value() const { return is_zero() ? 0.0 : mantissa * std::exp(log_scale); }

    Scaled operator-() const { return {-mantissa, log_scale}; }
};

inline Scaled operator*(const Scaled& a, const Scaled& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    return Scaled::normalized(a.mantissa * b.mantissa, a.log_scale + b.log_scale);
}

inline Scaled operator/(const Scaled& a, const Scaled& b)
{
    if (a.is_zero())
        return {};
    return Scaled::normalized(a.mantissa / b.mantissa, a.log_scale - b.log_scale);
}

inline Scaled operator*(const Scaled& a, double s) { return a * Scaled::from_double(s); }
inline Scaled operator*(double s, const Scaled& a) { return a * Scaled::from_double(s); }
inline Scaled operator/(const Scaled& a, double s) { return a / Scaled::from_double(s); }

inline Scaled operator+(const Scaled& a, const Scaled& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    double top = a.log_scale > b.log_scale ? a.log_scale : b.log_scale;
    double m = a.mantissa * std::exp(a.log_scale - top) + b.mantissa * std::exp(b.log_scale - top);
    return Scaled::normalized(m, top);
}

inline Scaled operator-(const Scaled& a, const Scaled& b) { return a + (-b); }
inline Scaled operator+(const Scaled& a, double s) { return a + Scaled::from_double(s); }
inline Scaled operator-(const Scaled& a, double s) { return a + Scaled::from_double(-s); }

// exp(x) without overflow
inline Scaled scaled_exp(double x) { return Scaled::from_log(1.0, x); }

} // namespace uvreg
