#include "uvreg/model.hpp"

#include "uvreg/errors.hpp"
#include "uvreg/quad.hpp"

#include <cmath>
#include <numbers>

namespace uvreg::model {

using std::numbers::pi;

void ModelParams::validate() const
{
    if (!(g >= 0.0) || !std::isfinite(g))
        throw DomainError("coupling g must be finite and non-negative");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw DomainError("lambda must be finite and positive");
}

double u_reduced(double k, double lambda)
{
    if (!(k > 0.0))
        throw DomainError("u_reduced requires k > 0");
    if (std::isinf(lambda))
        return -std::pow(k, -1.5);
    return -std::exp(-k * k / (4.0 * lambda * lambda)) * std::pow(k, -1.5);
}

double phi_ratio(double q, double lambda)
{
    if (!(q >= 0.0))
        throw DomainError("phi_ratio requires q >= 0");
    return std::exp(-q * q / (2.0 * lambda * lambda));
}

namespace {

// sin(z)/z - 1 without cancellation near 0
double sinc_minus_one(double z)
{
    double z2 = z * z;
    if (std::fabs(z) < 1e-2)
        return -z2 / 6.0 * (1.0 - z2 / 20.0 * (1.0 - z2 / 42.0 * (1.0 - z2 / 72.0)));
    return std::sin(z) / z - 1.0;
}

} // namespace

double phi_big(double R, const ModelParams& params, double rel_tol)
{
    params.validate();
    if (!(R >= 0.0))
        throw DomainError("phi_big requires R >= 0");
    if (R == 0.0 || params.g == 0.0)
        return 0.0;
    double s = params.lambda * R;
    auto f = [s](double t) { return t == 0.0 ? 0.0 : std::exp(-0.5 * t * t) / t * sinc_minus_one(s * t); };
    // the sinc oscillation is resolved better on a finite piece first
    double split = 12.0;
    auto head = quad::integrate_finite(f, 0.0, split, rel_tol);
    auto tail = quad::integrate_semi_infinite(f, split, rel_tol);
    return params.g * params.g / (4.0 * pi * pi) * (head.value + tail.value);
}

namespace {

// int_0^K ln(a + k/2) dk
double antiderivative(double a, double K)
{
    double top = a + 0.5 * K;
    return 2.0 * (top * std::log(top) - a * std::log(a) - 0.5 * K);
}

} // namespace

double pt_self_energy(double P, double K, double g)
{
    if (!(P >= 0.0))
        throw DomainError("pt_self_energy requires P >= 0");
    if (!(P < 1.0))
        throw DomainError("pt_self_energy: denominator vanishes for P >= 1");
    if (!(K >= 0.0))
        throw DomainError("pt_self_energy requires K >= 0");
    double pref = g * g / (8.0 * pi * pi);
    if (K == 0.0)
        return 0.0;
    if (P < 1e-4) {
        // (F(1+P) - F(1-P)) / P = 2F'(1) + P^2 F'''(1)/3 + O(P^4)
        double d1 = 2.0 * std::log1p(0.5 * K);
        double d3 = 2.0 * (1.0 - 1.0 / ((1.0 + 0.5 * K) * (1.0 + 0.5 * K)));
        return -pref * (2.0 * d1 + P * P * d3 / 3.0);
    }
    return -pref / P * (antiderivative(1.0 + P, K) - antiderivative(1.0 - P, K));
}

double pt_mass(double g) { return 1.0 + g * g / (6.0 * pi * pi); }

} // namespace uvreg::model
