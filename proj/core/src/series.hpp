#pragma once

// Cancellation-free building blocks for the error-function combinations that
// appear in the kernels and in the alpha integral. Arguments are >= 0.
//
// With E(x) = exp(x^2) erf(x) and F(x) = int_0^x exp(t^2) dt:
//   erf_excess(x)       = (sqrt(pi)/2) E(x) - x
//   erf_slope(x)        = x E'(x) - E(x)
//   erf_ratio_shift(x)  = E(x)/x - 2/sqrt(pi)
//   erfi_slope(x)       = x F'(x) - F(x)
//   erfi_ratio_shift(x) = F(x)/x - 1
// Each is a power series with positive terms; it is summed directly for
// small x and evaluated from erf/dawson with exponent bookkeeping otherwise.

#include "uvreg/scaled.hpp"

namespace uvreg::detail {

Scaled exp_erf(double x);
Scaled erf_excess(double x);
Scaled erf_slope(double x);
Scaled erf_ratio_shift(double x);
Scaled erfi_slope(double x);
Scaled erfi_ratio_shift(double x);

} // namespace uvreg::detail
