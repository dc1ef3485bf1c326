#pragma once

#include "uvreg/scaled.hpp"

namespace uvreg::specfun {

double erf(double x);

// D(x) = exp(-x^2) * integral_0^x exp(t^2) dt, odd in x.
double dawson(double x);

// exp(a x^2) * erf(x) as mantissa/exponent, never overflowing.
Scaled erf_scaled_product(double a, double x);

// integral_0^x exp(t^2) dt = exp(x^2) D(x) = (sqrt(pi)/2) erfi(x)
Scaled erfi_integral(double x);

} // namespace uvreg::specfun
