#pragma once

namespace uvreg::model {

// Units: m = hbar = c = 1, omega_k = k. The normalisation volume is
// cancelled analytically everywhere, so nothing here depends on it.
struct ModelParams {
    double g = 0.0;
    double lambda = 1.0;

    void validate() const;
};

struct Momentum {
    double p = 0.0;
};

// Field amplitude with g/sqrt(2 Omega) stripped: -exp(-k^2/4l^2) / k^{3/2}
double u_reduced(double k, double lambda);

// phi_q / phi_0 = exp(-q^2 / 2l^2)
double phi_ratio(double q, double lambda);

// Phi(R) = g^2/(4 pi^2) int_0^inf dt exp(-t^2/2)/t (sinc(lambda R t) - 1)
double phi_big(double R, const ModelParams& params, double rel_tol = 1e-10);

// Second-order self energy with |k| <= K, valid for P < 1.
double pt_self_energy(double P, double K, double g);

// 1 + g^2/(6 pi^2)
double pt_mass(double g);

} // namespace uvreg::model
