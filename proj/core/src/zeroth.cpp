#include "uvreg/zeroth.hpp"

#include "series.hpp"
#include "uvreg/errors.hpp"
#include "uvreg/quad.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace uvreg::zeroth {

using std::numbers::pi;

namespace {

const double sqrt2 = std::numbers::sqrt2;

void check_g(double g)
{
    if (!(g >= 0.0) || !std::isfinite(g))
        throw DomainError("coupling g must be finite and non-negative");
}

void check_lambda(double lambda)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw DomainError("lambda must be finite and positive");
}

// e0_full / g^2, which keeps the minimiser well scaled for tiny g
double e0_full_reduced(double g, double lambda)
{
    return (lambda * (sqrt2 - 4.0) * std::sqrt(3.0 * pi) + lambda * lambda) / (24.0 * pi * pi) -
           g * g * lambda * lambda * alpha_constant() / (256.0 * std::pow(pi, 4));
}

} // namespace

double e0_weak(double g, double lambda)
{
    check_g(g);
    check_lambda(lambda);
    return g * g / (24.0 * pi * pi) * (lambda * (sqrt2 - 4.0) * std::sqrt(3.0 * pi) + lambda * lambda);
}

double alpha_integrand(double u)
{
    if (u <= 0.0)
        return 0.0;
    // -(4u - sqrt(6 pi) e^{x^2} erf x)/u^2 e^{-3u^2/2} = 2 sqrt6 S(x)/u^2 e^{-3u^2/2}
    double x = std::sqrt(2.0 / 3.0) * u;
    Scaled s = detail::erf_excess(x) * scaled_exp(-1.5 * u * u);
    return 2.0 * std::sqrt(6.0) * s.value() / (u * u);
}

double alpha_constant()
{
    static const double alpha = [] {
        quad::Options opt;
        opt.rel_tol = 1e-12;
        return quad::integrate_semi_infinite(alpha_integrand, 0.0, opt).value;
    }();
    return alpha;
}

double e0_full(double g, double lambda)
{
    double weak = e0_weak(g, lambda);
    return weak - std::pow(g, 4) * lambda * lambda * alpha_constant() / (256.0 * std::pow(pi, 4));
}

double lambda_limit() { return std::sqrt(3.0 * pi) * (4.0 - sqrt2) / 2.0; }

double lambda_opt(double g)
{
    check_g(g);
    if (g > 10.0)
        throw DomainError("lambda_opt is only defined for g <= 10");
    if (g == 0.0)
        return lambda_limit();
    return quad::minimize_scalar([g](double l) { return e0_full_reduced(g, l); }, 0.5, 20.0, 1e-12);
}

double e0_weak_moving(double P, double g, double lambda, double rel_tol)
{
    check_g(g);
    check_lambda(lambda);
    if (!(P >= 0.0))
        throw DomainError("e0_weak_moving takes the momentum magnitude P >= 0");

    quad::Options inner;
    inner.rel_tol = rel_tol;
    double l2 = lambda * lambda;

    // per radial momentum m, the three angular integrals over c = cos theta
    auto radial = [&](double m) {
        double wide = -1.5 * m * m / l2;
        double narrow = -0.75 * m * m / l2;
        auto recoil = [&](double c) { return c * std::exp(wide + 2.0 * P * m * c / l2); };
        auto field = [&](double c) { return std::exp(wide + 2.0 * P * m * c / l2); };
        auto coupling = [&](double c) { return std::exp(narrow + P * m * c / l2); };
        double q = P > 0.0 ? quad::integrate_finite(recoil, -1.0, 1.0, inner).value : 0.0;
        double f = quad::integrate_finite(field, -1.0, 1.0, inner).value;
        double i = quad::integrate_finite(coupling, -1.0, 1.0, inner).value;
        return -P * q + (1.0 + 0.5 * m) * f - 2.0 * i;
    };
    quad::Options outer;
    outer.rel_tol = rel_tol;
    double total = quad::integrate_semi_infinite(radial, 0.0, outer, lambda).value;
    return g * g / (8.0 * pi * pi) * total;
}

double mass0_coefficient() { return (17.0 - sqrt2) / (189.0 * pi * pi); }

double mass0(double g)
{
    check_g(g);
    return 1.0 + g * g * mass0_coefficient();
}

MassFit mass0_fit(double g, double lambda, double rel_tol)
{
    check_g(g);
    check_lambda(lambda);
    if (g == 0.0)
        throw DomainError("mass0_fit needs g > 0");
    constexpr std::array<double, 4> ps{0.0, 0.02, 0.04, 0.06};
    // least squares c0 + c1 P + c2 P^2 through the normal equations
    std::array<std::array<double, 4>, 3> m{};
    for (double p : ps) {
        double y = 0.5 * p * p + e0_weak_moving(p, g, lambda, rel_tol);
        double basis[3] = {1.0, p, p * p};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c)
                m[r][c] += basis[r] * basis[c];
            m[r][3] += basis[r] * y;
        }
    }
    for (int c = 0; c < 3; ++c)
        for (int r = c + 1; r < 3; ++r) {
            double f = m[r][c] / m[c][c];
            for (int k = c; k < 4; ++k)
                m[r][k] -= f * m[c][k];
        }
    double x[3];
    for (int r = 2; r >= 0; --r) {
        double acc = m[r][3];
        for (int k = r + 1; k < 3; ++k)
            acc -= m[r][k] * x[k];
        x[r] = acc / m[r][r];
    }
    MassFit out;
    out.linear = x[1];
    out.curvature = x[2];
    // P^2/(2m) = P^2/2 - kappa g^2 P^2/2 to this order
    out.coefficient = (1.0 - 2.0 * x[2]) / (g * g);
    return out;
}

ZerothResult solve(double g, std::optional<double> lambda)
{
    ZerothResult r;
    r.lambda_opt = lambda ? *lambda : lambda_opt(g);
    r.e0_weak = e0_weak(g, r.lambda_opt);
    r.e0_full = e0_full(g, r.lambda_opt);
    r.mass0 = mass0(g);
    return r;
}

} // namespace uvreg::zeroth
