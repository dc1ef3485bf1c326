#pragma once

#include "uvreg/scaled.hpp"

#include <cstddef>
#include <cstdint>

namespace uvreg::kernels {

// Kernel values grow like exp(2k^2/3l^2), so they are carried scaled.
using KernelValue = Scaled;

// All I kernels depend on the momentum only through its magnitude (the
// defining sums are isotropic), so I at a vector argument q is I(|q|).

// k . I1(k), with the k -> 0 value 0
KernelValue kernel_I1_dot_k(double k, double lambda);
KernelValue kernel_I2(double k, double lambda);
KernelValue kernel_I3(double k, double lambda);

// I = k.I1 + I2 + I3; k = 0 is allowed and returns the limit
KernelValue kernel_I(double k, double lambda);

// I(k) - I(0) without the small-k cancellation
KernelValue kernel_I_shift(double k, double lambda);

// dI/dk
KernelValue kernel_I_derivative(double k, double lambda);

// Large-k forms
KernelValue kernel_I1_dot_k_asymptotic(double k, double lambda);
KernelValue kernel_I2_asymptotic(double k, double lambda);
KernelValue kernel_I3_asymptotic(double k, double lambda);
KernelValue kernel_I_asymptotic(double k, double lambda);
KernelValue kernel_I_asymptotic_derivative(double k, double lambda);

// Below this k/lambda the kernels use their Taylor polynomials.
inline constexpr double series_switch = 1e-3;

// Approximate closed form for the two-phonon kernel J
double kernel_J(double k, double lambda);
KernelValue kernel_J_scaled(double k, double lambda);
double kernel_J_derivative(double k, double lambda);
KernelValue kernel_J_derivative_scaled(double k, double lambda);

// Exact k = 0 value -lambda^2 alpha / (2^8 pi^4)
double kernel_J0_exact(double lambda);

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

inline constexpr std::uint64_t default_seed = 0xC0FFEE;

// Monte Carlo estimate of the defining six-dimensional sum for J, divided
// by phi_k^2. Deterministic for a fixed seed.
McEstimate kernel_J_oracle(double k, double lambda, std::size_t samples, std::uint64_t seed = default_seed);

} // namespace uvreg::kernels
