#pragma once

#include "uvreg/model.hpp"

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace uvreg::second {

enum class TailMode {
    full,       // exact kernels on the whole half line
    asymptotic, // large-k kernel forms beyond k_switch
};

struct Settings {
    double rel_tol = 1e-10;
    std::size_t max_evaluations = 1'000'000;
    bool include_j = true;
    TailMode tail = TailMode::full;
    // k_switch = switch_scale * max(6 lambda, k0 + 2 lambda)
    double switch_scale = 1.0;
};

struct CutoffResult {
    double k0 = 0.0;
    double k0_asymptotic = 0.0;
    // denominator at k0 relative to k0(k0/2 + 1)
    double residual = 0.0;
};

struct ComplexEnergy {
    double re = 0.0;
    double im = 0.0;

    std::complex<double> value() const { return {re, im}; }
    static ComplexEnergy from(std::complex<double> z) { return {z.real(), z.imag()}; }
};

struct ExactResult {
    ComplexEnergy a;
    ComplexEnergy b;
    ComplexEnergy e2;
    // zeros of the dressed denominator that were integrated through
    std::vector<double> poles;
    bool has_pole = false;
    double e0 = 0.0;
    double k_switch = 0.0;
};

struct IterationResult {
    model::ModelParams params;
    double e0 = 0.0;
    CutoffResult k0;
    ComplexEnergy a;
    ComplexEnergy b;
    ComplexEnergy e2;
    double e2_analytic = 0.0;
    double e2_singular = 0.0;
    double transition_half_rate = 0.0;
    double mass2 = 1.0;
    double mass2_first_order = 1.0;
    bool has_pole = true;
};

// Imaginary part contributed by a simple zero of the denominator with the
// given residue coefficient. The prescription D -> D - i0 lives here alone.
double resolvent_imaginary(double residue_coefficient);

double k0_asymptotic(double g, double lambda);

// Integrands of A - E0 and B - 1 at one k (exact kernels), for diagnostics.
double integrand_a(double g, double lambda, double k, bool include_j = true);
double integrand_b(double g, double lambda, double k, bool include_j = true);

// First zero of k^2/2 + k + g^2 I_k - E0.
CutoffResult cutoff_k0(double g, double lambda, const Settings& settings = {});

// A, B and A/B of the second iteration by quadrature.
ExactResult e2_exact(double g, double lambda, const Settings& settings = {});

// Square bracket of the closed-form numerator; tends to e0_weak as k0 grows.
double analytic_bracket(double g, double lambda, double k0);

// f(x) = 1/(4 pi^2) int_0^x t/(1 + t/2) exp(-3t^2/4) dt
double analytic_f(double x, double rel_tol = 1e-12);

double analytic_a(double g, double lambda, double k0);
double analytic_b(double g, double lambda, double k0, double rel_tol = 1e-12);
double e2_analytic(double g, double lambda, double k0, double rel_tol = 1e-12);

// -g^2/(2 pi^2) ln(k0/2 + 1), i.e. the perturbative self energy cut at k0
double e2_singular(double g, double k0);

// Half the decay rate into one-phonon states on the shell k = k0.
double transition_half_rate(double g, double lambda, double k0);
double transition_half_rate(double g, double lambda, const Settings& settings = {});

// c(k0) = 1/(6 pi^2) int_0^k0 dk/(1 + k/2)^3
double mass2_coefficient(double k0);
double mass2(double g, double k0);
double mass2_first_order(double g, double k0);

// E(P) - E(0) from the k < k0 sum with the (P.k)^2 weight, by quadrature.
double moving_energy_shift(double P, double g, double k0, double rel_tol = 1e-12);

// Everything for one coupling. lambda defaults to lambda_opt(g).
IterationResult iterate(double g, std::optional<double> lambda = {}, const Settings& settings = {});

} // namespace uvreg::second
