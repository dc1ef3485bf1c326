#pragma once

#include <optional>

namespace uvreg::zeroth {

struct ZerothResult {
    double lambda_opt = 0.0;
    double e0_weak = 0.0;
    double e0_full = 0.0;
    double mass0 = 1.0;
};

// g^2/(24 pi^2) (lambda (sqrt2 - 4) sqrt(3 pi) + lambda^2)
double e0_weak(double g, double lambda);

// integrand of alpha; exposed for checks
double alpha_integrand(double u);

// alpha = 0.73655871..., computed once
double alpha_constant();

// e0_weak - g^4 lambda^2 alpha / (2^8 pi^4)
double e0_full(double g, double lambda);

// g -> 0 optimum sqrt(3 pi)(4 - sqrt2)/2
double lambda_limit();

// argmin over lambda of e0_full; valid for 0 <= g <= 10
double lambda_opt(double g);

// Energy at total momentum P without the free P^2/2 term, from the three
// Gaussian sums done as (k, cos theta) quadratures.
double e0_weak_moving(double P, double g, double lambda, double rel_tol = 1e-12);

// (17 - sqrt2) / (189 pi^2)
double mass0_coefficient();
double mass0(double g);

struct MassFit {
    // kappa in 1/m = 1 - kappa g^2
    double coefficient = 0.0;
    double linear = 0.0;
    double curvature = 0.0;
};

// Quadratic least squares of P^2/2 + e0_weak_moving over P = 0, .02, .04, .06.
MassFit mass0_fit(double g, double lambda, double rel_tol = 1e-12);

ZerothResult solve(double g, std::optional<double> lambda = {});

} // namespace uvreg::zeroth
