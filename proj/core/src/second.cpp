#include "uvreg/second.hpp"

#include "uvreg/errors.hpp"
#include "uvreg/kernels.hpp"
#include "uvreg/model.hpp"
#include "uvreg/quad.hpp"
#include "uvreg/scaled.hpp"
#include "uvreg/zeroth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace uvreg::second {

using std::numbers::pi;

namespace {

// The denominator is scanned on this grid before bracketing its zeros.
constexpr double scan_step = 0.02;
constexpr double scan_end = 40.0;

void require_coupling(double g, double lambda)
{
    if (!(g > 0.0) || !std::isfinite(g))
        throw DomainError("g must be finite and positive");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw DomainError("lambda must be finite and positive");
}

// expm1(x) for any x, carried scaled
Scaled scaled_expm1(double x)
{
    if (x > 1.0)
        return Scaled::from_log(1.0, x + std::log1p(-std::exp(-x)));
    return Scaled::from_double(std::expm1(x));
}

// D(k) = k(k/2 + 1) + g^2 (I_k - I_0) + g^4 (J_k - J_0) and the two
// numerators of the A and B integrands, all without overflow. With J
// switched off this is the plain E0 = e0_weak problem.
class Resolvent {
public:
    Resolvent(double g, double lambda, bool with_j)
        : g2_(g * g), lambda_(lambda), with_j_(with_j),
          i0_(kernels::kernel_I(0.0, lambda).value()),
          j0_(with_j ? kernels::kernel_J(0.0, lambda) : 0.0),
          e0_(zeroth::e0_weak(g, lambda) + g2_ * g2_ * j0_)
    {
    }

    double e0() const { return e0_; }

    Scaled delta_i(double k, bool asymptotic) const
    {
        if (asymptotic)
            return (kernels::kernel_I_asymptotic(k, lambda_) - i0_) * g2_;
        return kernels::kernel_I_shift(k, lambda_) * g2_;
    }

    Scaled delta_j(double k) const
    {
        if (!with_j_)
            return {};
        return (kernels::kernel_J_scaled(k, lambda_) - j0_) * (g2_ * g2_);
    }

    Scaled den(double k, bool asymptotic) const
    {
        return Scaled::from_double(k * (0.5 * k + 1.0)) + delta_i(k, asymptotic) + delta_j(k);
    }

    // sum of the magnitudes of the terms of D; sets the scale of its zeros
    Scaled den_size(double k, bool asymptotic) const
    {
        Scaled di = delta_i(k, asymptotic);
        Scaled dj = delta_j(k);
        return Scaled::from_double(k * (0.5 * k + 1.0)) + Scaled{std::fabs(di.mantissa), di.log_scale} +
               Scaled{std::fabs(dj.mantissa), dj.log_scale};
    }

    double den_normalized(double k, bool asymptotic) const
    {
        return (den(k, asymptotic) / den_size(k, asymptotic)).value();
    }

    Scaled den_slope(double k, bool asymptotic) const
    {
        Scaled di = asymptotic ? kernels::kernel_I_asymptotic_derivative(k, lambda_)
                               : kernels::kernel_I_derivative(k, lambda_);
        Scaled out = Scaled::from_double(k + 1.0) + di * g2_;
        if (with_j_)
            out = out + kernels::kernel_J_derivative_scaled(k, lambda_) * (g2_ * g2_);
        return out;
    }

    struct Numerators {
        Scaled n1;
        Scaled n2;
    };

    Numerators numerators(double k, bool asymptotic) const
    {
        double q = k * k / (lambda_ * lambda_);
        // phi/sqrt(k) + v phi^2 k(k/2 + 1), with the 1 - 1 cancellation done by hand
        double x = std::exp(-0.5 * q) / std::sqrt(k) *
                   (-std::expm1(-0.75 * q) - 0.5 * k * std::exp(-0.75 * q));
        double log_k = std::log(k);
        Scaled v_phi2 = Scaled::from_log(-1.0, -1.25 * q - 1.5 * log_k);
        Scaled v = Scaled::from_log(-1.0, -0.25 * q - 1.5 * log_k);
        Scaled shift = v_phi2 * (delta_i(k, asymptotic) + delta_j(k));
        Scaled n1 = -(Scaled::from_double(x) + shift);
        Scaled n2 = Scaled::from_double(x) + shift + v * (e0_ * std::expm1(-q));
        return {n1, n2};
    }

    // (g^2/4pi^2) k^2 N1 N2 / phi^2
    Scaled num_a(double k, bool asymptotic) const
    {
        auto [n1, n2] = numerators(k, asymptotic);
        double q = k * k / (lambda_ * lambda_);
        return n1 * n2 * scaled_exp(q) * (g2_ / (4.0 * pi * pi) * k * k);
    }

    // (g^2/4pi^2) k^2 N1 v (phi^2 - 1) / phi^2
    Scaled num_b(double k, bool asymptotic) const
    {
        auto [n1, n2] = numerators(k, asymptotic);
        (void)n2;
        double q = k * k / (lambda_ * lambda_);
        Scaled v = Scaled::from_log(-1.0, -0.25 * q - 1.5 * std::log(k));
        return -(n1 * v * scaled_expm1(q)) * (g2_ / (4.0 * pi * pi) * k * k);
    }

    Scaled n2_squared_over_phi2(double k) const
    {
        auto [n1, n2] = numerators(k, false);
        (void)n1;
        return n2 * n2 * scaled_exp(k * k / (lambda_ * lambda_));
    }

    double lambda() const { return lambda_; }

private:
    double g2_;
    double lambda_;
    bool with_j_;
    double i0_;
    double j0_;
    double e0_;
};

double bracket_zero(const Resolvent& r, double lo, double hi, bool asymptotic)
{
    return quad::find_root([&](double k) { return r.den_normalized(k, asymptotic); }, lo, hi,
                           1e-14 * r.lambda());
}

// Zeros of D on (from, to], scanned with one kernel form.
void scan_zeros(const Resolvent& r, double from, double to, bool asymptotic, std::vector<double>& out,
                bool first_only = false)
{
    double h = scan_step * r.lambda();
    double a = std::max(from, h);
    double fa = r.den_normalized(a, asymptotic);
    while (a < to) {
        double b = std::min(a + h, to);
        double fb = r.den_normalized(b, asymptotic);
        if (fa == 0.0) {
            out.push_back(a);
        } else if (fa * fb < 0.0) {
            out.push_back(bracket_zero(r, a, b, asymptotic));
        }
        if (first_only && !out.empty())
            return;
        a = b;
        fa = fb;
    }
}

struct Piece {
    double re = 0.0;
    double im = 0.0;
};

class Integrator {
public:
    Integrator(const Resolvent& r, const Settings& s, std::vector<double> poles, double k_switch, bool split)
        : r_(r), s_(s), poles_(std::move(poles)), k_switch_(k_switch), split_(split)
    {
        double l = r.lambda();
        std::vector<double> marks{0.0};
        if (split_)
            marks.push_back(k_switch_);
        marks.insert(marks.end(), poles_.begin(), poles_.end());
        std::sort(marks.begin(), marks.end());
        for (double p : poles_) {
            auto it = std::lower_bound(marks.begin(), marks.end(), p);
            double gap_lo = p - *(it - 1);
            double gap_hi = (it + 1 == marks.end()) ? l : *(it + 1) - p;
            windows_.push_back(std::min({0.5 * l, 0.45 * gap_lo, 0.45 * gap_hi}));
        }
    }

    template <class Num>
    Piece integrate(const Num& num, double abs_tol) const
    {
        quad::Options opt{s_.rel_tol, abs_tol, s_.max_evaluations};
        Piece out;
        double x = 0.0;
        for (std::size_t i = 0; i < poles_.size(); ++i) {
            double p = poles_[i];
            double w = windows_[i];
            plain(num, x, p - w, opt, out);
            bool asym = asymptotic_at(p);
            Scaled size = r_.den_size(p, asym);
            auto fn = [&](double k) { return (num(k, asym) / size).value(); };
            auto fd = [&](double k) { return (r_.den(k, asym) / size).value(); };
            quad::PVOptions pv;
            pv.quad = opt;
            pv.den_slope = (r_.den_slope(p, asym) / size).value();
            auto res = quad::integrate_principal_value(fn, fd, p, p - w, p + w, pv);
            out.re += res.principal_value;
            out.im += resolvent_imaginary(res.residue_coefficient);
            x = p + w;
        }
        if (split_ && x < k_switch_) {
            plain(num, x, k_switch_, opt, out);
            x = k_switch_;
        }
        bool asym = asymptotic_at(x);
        auto f = [&](double k) { return ratio(num, k, asym); };
        out.re += quad::integrate_semi_infinite(f, x, opt, r_.lambda()).value;
        return out;
    }

private:
    bool asymptotic_at(double k) const { return split_ && k >= k_switch_; }

    template <class Num>
    double ratio(const Num& num, double k, bool asym) const
    {
        if (k == 0.0)
            return 0.0;
        return (num(k, asym) / r_.den(k, asym)).value();
    }

    template <class Num>
    void plain(const Num& num, double a, double b, const quad::Options& opt, Piece& out) const
    {
        if (!(b > a))
            return;
        if (split_ && a < k_switch_ && k_switch_ < b) {
            plain(num, a, k_switch_, opt, out);
            plain(num, k_switch_, b, opt, out);
            return;
        }
        bool asym = asymptotic_at(a);
        out.re += quad::integrate_finite([&](double k) { return ratio(num, k, asym); }, a, b, opt).value;
    }

    const Resolvent& r_;
    const Settings& s_;
    std::vector<double> poles_;
    std::vector<double> windows_;
    double k_switch_;
    bool split_;
};

} // namespace

double resolvent_imaginary(double residue_coefficient)
{
    // 1/(D - i0) = PV 1/D + i pi delta(D)
    return pi * residue_coefficient;
}

double k0_asymptotic(double g, double lambda)
{
    require_coupling(g, lambda);
    return lambda * std::sqrt(3.0 * std::fabs(std::log(g)));
}

double integrand_a(double g, double lambda, double k, bool include_j)
{
    require_coupling(g, lambda);
    if (!(k > 0.0))
        throw DomainError("integrand_a requires k > 0");
    Resolvent r(g, lambda, include_j);
    return (r.num_a(k, false) / r.den(k, false)).value();
}

double integrand_b(double g, double lambda, double k, bool include_j)
{
    require_coupling(g, lambda);
    if (!(k > 0.0))
        throw DomainError("integrand_b requires k > 0");
    Resolvent r(g, lambda, include_j);
    return (r.num_b(k, false) / r.den(k, false)).value();
}

CutoffResult cutoff_k0(double g, double lambda, const Settings&)
{
    require_coupling(g, lambda);
    Resolvent r(g, lambda, false);
    std::vector<double> zeros;
    scan_zeros(r, 0.0, scan_end * lambda, false, zeros, true);
    if (zeros.empty())
        throw NoSignChange("no zero of the cutoff equation below 40 lambda");
    CutoffResult out;
    out.k0 = zeros.front();
    out.k0_asymptotic = k0_asymptotic(g, lambda);
    out.residual = r.den_normalized(out.k0, false);
    return out;
}

ExactResult e2_exact(double g, double lambda, const Settings& settings)
{
    require_coupling(g, lambda);
    Resolvent r(g, lambda, settings.include_j);
    bool split = settings.tail == TailMode::asymptotic;

    std::vector<double> first;
    scan_zeros(r, 0.0, scan_end * lambda, false, first, true);
    double k_ref = first.empty() ? 0.0 : first.front() + 2.0 * lambda;
    double k_switch = settings.switch_scale * std::max(6.0 * lambda, k_ref);

    std::vector<double> poles;
    if (split) {
        scan_zeros(r, 0.0, k_switch, false, poles);
        scan_zeros(r, k_switch, scan_end * lambda, true, poles);
    } else {
        scan_zeros(r, 0.0, scan_end * lambda, false, poles);
    }

    ExactResult out;
    out.poles = poles;
    out.has_pole = !poles.empty();
    out.e0 = r.e0();
    out.k_switch = k_switch;

    Integrator integ(r, settings, poles, k_switch, split);
    double g2 = g * g;
    double tol_a = 1e-2 * settings.rel_tol * g2 * std::max(lambda * lambda, 1.0) / (24.0 * pi * pi);
    double tol_b = 1e-2 * settings.rel_tol * g2 / (12.0 * pi * pi);
    Piece a = integ.integrate([&](double k, bool asym) { return r.num_a(k, asym); }, tol_a);
    Piece b = integ.integrate([&](double k, bool asym) { return r.num_b(k, asym); }, tol_b);

    out.a = {r.e0() + a.re, a.im};
    out.b = {1.0 + b.re, b.im};
    out.e2 = ComplexEnergy::from(out.a.value() / out.b.value());
    return out;
}

double analytic_bracket(double g, double lambda, double k0)
{
    double g2 = g * g;
    double r = k0 / lambda;
    return g2 * lambda / (24.0 * pi * pi) *
               (std::sqrt(6.0 * pi) * std::erf(std::sqrt(1.5) * r) + lambda - lambda * std::exp(-1.5 * r * r)) -
           g2 * lambda / (2.0 * std::sqrt(3.0) * pi * std::sqrt(pi)) * std::erf(std::sqrt(3.0) * r / 2.0);
}

double analytic_f(double x, double rel_tol)
{
    if (!(x >= 0.0))
        throw DomainError("analytic_f requires x >= 0");
    if (x == 0.0)
        return 0.0;
    auto f = [](double t) { return t / (1.0 + 0.5 * t) * std::exp(-0.75 * t * t); };
    // exp(-3t^2/4) is below 1e-300 past t = 31
    double top = std::min(x, 32.0);
    return quad::integrate_finite(f, 0.0, top, rel_tol).value / (4.0 * pi * pi);
}

double analytic_a(double g, double lambda, double k0)
{
    require_coupling(g, lambda);
    if (!(k0 > 0.0))
        throw DomainError("k0 must be positive");
    double e0 = zeroth::e0_weak(g, lambda);
    double r = k0 / lambda;
    return e0 - analytic_bracket(g, lambda, k0) - g * g / (2.0 * pi * pi) * std::log1p(0.5 * k0) +
           e0 * (12.0 * std::sqrt(6.0 * pi) / (5.0 * lambda * pi)) * std::exp(-5.0 * r * r / 12.0);
}

double analytic_b(double g, double lambda, double k0, double rel_tol)
{
    require_coupling(g, lambda);
    if (!(k0 > 0.0))
        throw DomainError("k0 must be positive");
    double g2 = g * g;
    double r = k0 / lambda;
    return 1.0 + g2 / (12.0 * pi * pi) * (1.0 - std::exp(-1.5 * r * r)) - g2 * analytic_f(r, rel_tol) -
           (144.0 * std::sqrt(6.0 * pi) / (25.0 * lambda * pi)) * (1.0 + 5.0 * r * r / 12.0) *
               std::exp(-5.0 * r * r / 12.0);
}

double e2_analytic(double g, double lambda, double k0, double rel_tol)
{
    return analytic_a(g, lambda, k0) / analytic_b(g, lambda, k0, rel_tol);
}

double e2_singular(double g, double k0) { return model::pt_self_energy(0.0, k0, g); }

double transition_half_rate(double g, double lambda, double k0)
{
    require_coupling(g, lambda);
    if (!(k0 > 0.0))
        throw DomainError("k0 must be positive");
    Resolvent r(g, lambda, false);
    Scaled slope = r.den_slope(k0, false);
    Scaled w = r.n2_squared_over_phi2(k0) / Scaled{std::fabs(slope.mantissa), slope.log_scale};
    return g * g / (4.0 * pi) * k0 * k0 * w.value();
}

double transition_half_rate(double g, double lambda, const Settings& settings)
{
    return transition_half_rate(g, lambda, cutoff_k0(g, lambda, settings).k0);
}

double mass2_coefficient(double k0)
{
    if (!(k0 >= 0.0))
        throw DomainError("k0 must be non-negative");
    double s = 1.0 + 0.5 * k0;
    return (1.0 - 1.0 / (s * s)) / (6.0 * pi * pi);
}

double mass2(double g, double k0) { return 1.0 / (1.0 - g * g * mass2_coefficient(k0)); }

double mass2_first_order(double g, double k0) { return 1.0 + g * g * mass2_coefficient(k0); }

double moving_energy_shift(double P, double g, double k0, double rel_tol)
{
    if (!(k0 >= 0.0))
        throw DomainError("k0 must be non-negative");
    // -(g^2/16 pi^3) int_{|k|<k0} d^3k (P.k)^2 / (k (k^2/2 + k)^3); the azimuth
    // gives 2 pi and the k powers cancel to 1/(1 + k/2)^3.
    auto radial = [&](double k) {
        double s = 1.0 + 0.5 * k;
        auto angular = [&](double c) { return P * P * c * c; };
        return quad::integrate_finite(angular, -1.0, 1.0, rel_tol).value / (s * s * s);
    };
    double sum = k0 > 0.0 ? quad::integrate_finite(radial, 0.0, k0, rel_tol).value : 0.0;
    return 0.5 * P * P - g * g / (8.0 * pi * pi) * sum;
}

IterationResult iterate(double g, std::optional<double> lambda, const Settings& settings)
{
    IterationResult out;
    out.params.g = g;
    out.params.lambda = lambda ? *lambda : zeroth::lambda_opt(g);
    out.params.validate();
    double l = out.params.lambda;
    require_coupling(g, l);

    out.e0 = zeroth::e0_weak(g, l);
    ExactResult ex = e2_exact(g, l, settings);
    out.a = ex.a;
    out.b = ex.b;
    out.e2 = ex.e2;
    out.has_pole = ex.has_pole;

    try {
        out.k0 = cutoff_k0(g, l, settings);
    } catch (const NoSignChange&) {
        out.has_pole = false;
        out.k0.k0 = std::numeric_limits<double>::quiet_NaN();
        out.k0.k0_asymptotic = g < 1.0 ? k0_asymptotic(g, l) : std::numeric_limits<double>::quiet_NaN();
        out.k0.residual = std::numeric_limits<double>::quiet_NaN();
    }
    double nan = std::numeric_limits<double>::quiet_NaN();
    if (std::isfinite(out.k0.k0)) {
        out.e2_analytic = e2_analytic(g, l, out.k0.k0, settings.rel_tol);
        out.e2_singular = e2_singular(g, out.k0.k0);
        out.transition_half_rate = transition_half_rate(g, l, out.k0.k0);
        out.mass2 = mass2(g, out.k0.k0);
        out.mass2_first_order = mass2_first_order(g, out.k0.k0);
    } else {
        out.e2_analytic = out.e2_singular = out.transition_half_rate = nan;
        out.mass2 = out.mass2_first_order = nan;
    }
    return out;
}

} // namespace uvreg::second
