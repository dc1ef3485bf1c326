#include "oracles.hpp"
#include "uvreg/errors.hpp"
#include "uvreg/kernels.hpp"
#include "uvreg/zeroth.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace uvreg;
using namespace uvreg::kernels;
using std::numbers::pi;

namespace {

const double l0 = zeroth::lambda_limit();

double ratio(const KernelValue& a, const KernelValue& b) { return (a / b).value(); }

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

} // namespace

TEST_CASE("kernels against radial integrals")
{
    for (double l : {1.0, l0, 8.0})
        for (double t : {0.01, 0.3, 1.0, 2.5, 4.0}) {
            double k = t * l;
            CAPTURE(l);
            CAPTURE(k);
            CHECK(rel(kernel_I1_dot_k(k, l).value(), double(oracle::kI1_radial(k, l))) < 1e-11);
            CHECK(rel(kernel_I2(k, l).value(), double(oracle::I2_radial(k, l))) < 1e-12);
            CHECK(rel(kernel_I3(k, l).value(), double(oracle::I3_radial(k, l))) < 1e-12);
        }
}

TEST_CASE("reference values")
{
    CHECK(kernel_I1_dot_k(0.5, l0).value() == doctest::Approx(-0.0014132116803195697763).epsilon(1e-12));
    CHECK(kernel_I2(0.5, l0).value() == doctest::Approx(0.13998901016868311751).epsilon(1e-13));
    CHECK(kernel_I3(0.5, l0).value() == doctest::Approx(-0.20613373697170508602).epsilon(1e-13));
    CHECK(kernel_I1_dot_k(l0, l0).value() == doctest::Approx(-0.11758927501513677627).epsilon(1e-13));
    CHECK(kernel_I2(l0, l0).value() == doctest::Approx(0.1984449789132731032).epsilon(1e-13));
    CHECK(kernel_I3(l0, l0).value() == doctest::Approx(-0.23111394498380096973).epsilon(1e-13));
    CHECK(kernel_I(l0, l0).value() == doctest::Approx(-0.1502582410856646428).epsilon(1e-13));
    CHECK(kernel_I_derivative(l0, l0).value() == doctest::Approx(-0.053057019651829539233).epsilon(1e-12));
    CHECK(kernel_I(3.0 * l0, l0).value() == doctest::Approx(-17.329693240232154502).epsilon(1e-13));
    CHECK(kernel_I_derivative(3.0 * l0, l0).value() == doctest::Approx(-15.977428089756851805).epsilon(1e-12));
}

TEST_CASE("composite kernel is the sum of its parts")
{
    for (double l : {1.0, l0, 8.0}) {
        for (double t : {1e-4, 0.1, 1.0, 3.0, 7.0}) {
            double k = t * l;
            double sum = (kernel_I1_dot_k(k, l) + kernel_I2(k, l) + kernel_I3(k, l)).value();
            CHECK(rel(kernel_I(k, l).value(), sum) < 1e-12);
        }
        double at_zero = double(oracle::I2_radial(0, l) + oracle::I3_radial(0, l));
        CHECK(rel(kernel_I(0.0, l).value(), at_zero) < 1e-13);
        CHECK(kernel_I_shift(0.0, l).is_zero());
        // g^2 I(0) is the zeroth-order ground state energy
        CHECK(kernel_I(0.0, l).value() == doctest::Approx(zeroth::e0_weak(1.0, l)).epsilon(1e-14));
        for (double t : {0.3, 2.0})
            CHECK(rel(kernel_I_shift(t * l, l).value(), kernel_I(t * l, l).value() - kernel_I(0.0, l).value()) < 1e-11);
    }
}

TEST_CASE("signs and scaling")
{
    for (double t : {0.01, 0.5, 2.0, 9.0}) {
        double k = t * l0;
        CHECK(kernel_I1_dot_k(k, l0).sign() < 0);
        CHECK(kernel_I2(k, l0).sign() > 0);
        CHECK(kernel_I3(k, l0).sign() < 0);
        CHECK(kernel_I(k, l0).sign() < 0);
    }
    // k -> 0: (sqrt(pi/6) l + l^2/6) / (4 pi^2), so the l^2 piece scales by 4
    for (double l : {2.0, 4.0})
        CHECK(kernel_I2(1e-9 * l, l).value() ==
              doctest::Approx((std::sqrt(pi / 6.0) * l + l * l / 6.0) / (4.0 * pi * pi)).epsilon(1e-13));
    CHECK(std::fabs(kernel_I1_dot_k(1e-6, l0).value()) < 1e-13);
    CHECK_THROWS_AS(kernel_I(-1.0, l0), DomainError);
    CHECK_THROWS_AS(kernel_I(1.0, 0.0), DomainError);
}

TEST_CASE("large-momentum forms")
{
    CHECK(std::fabs(ratio(kernel_I1_dot_k_asymptotic(5.0 * l0, l0), kernel_I1_dot_k(5.0 * l0, l0)) - 1.0) < 0.02);
    CHECK(std::fabs(ratio(kernel_I1_dot_k_asymptotic(6.0 * l0, l0), kernel_I1_dot_k(6.0 * l0, l0)) - 1.0) < 0.01);
    CHECK(std::fabs(ratio(kernel_I2_asymptotic(6.0 * l0, l0), kernel_I2(6.0 * l0, l0)) - 1.0) < 0.01);
    CHECK(std::fabs(ratio(kernel_I1_dot_k_asymptotic(l0, l0), kernel_I1_dot_k(l0, l0)) - 1.0) > 0.5);
    CHECK(std::fabs(ratio(kernel_I3_asymptotic(l0, l0), kernel_I3(l0, l0)) - 1.0) > 0.5);
    CHECK(std::fabs(ratio(kernel_I_asymptotic(l0, l0), kernel_I(l0, l0)) - 1.0) > 0.5);

    double prev_i3 = INFINITY, prev_i = INFINITY;
    for (double t : {4.0, 6.0, 8.0, 10.0, 12.0, 16.0}) {
        double k = t * l0;
        double d3 = std::fabs(ratio(kernel_I3_asymptotic(k, l0), kernel_I3(k, l0)) - 1.0);
        double d = std::fabs(ratio(kernel_I_asymptotic(k, l0), kernel_I(k, l0)) - 1.0);
        CHECK(d3 < prev_i3);
        CHECK(d < prev_i);
        prev_i3 = d3;
        prev_i = d;
    }
    CHECK(prev_i < 0.03);
    CHECK(prev_i3 < 0.01);
}

TEST_CASE("Gaussian growth of the large-momentum form")
{
    // log|I_asym| + ln k is linear in k^2 with slope 2/(3 l^2)
    for (double l : {1.0, l0}) {
        auto h = [l](double k) { return kernel_I_asymptotic(k, l).log_abs() + std::log(k); };
        double k1 = 5.0 * l, k2 = 9.0 * l;
        double slope = (h(k2) - h(k1)) / (k2 * k2 - k1 * k1);
        CHECK(slope == doctest::Approx(2.0 / (3.0 * l * l)).epsilon(1e-6));
    }
    // the scaled form survives far past double overflow
    auto big = kernel_I(60.0 * l0, l0);
    CHECK(std::isfinite(big.log_abs()));
    CHECK(big.log_abs() > 2000.0);
    CHECK(std::fabs(ratio(kernel_I_asymptotic(60.0 * l0, l0), big) - 1.0) < 0.01);
}

TEST_CASE("derivative against finite differences")
{
    std::vector<double> ts;
    for (int i = 0; i < 50; ++i)
        ts.push_back(0.01 * std::pow(800.0, i / 49.0));
    for (double t : ts) {
        double k = t * l0;
        double h = 1e-4 * k;
        auto v = [](double x) { return kernel_I(x, l0).value(); };
        double fd = (8.0 * (v(k + h) - v(k - h)) - (v(k + 2 * h) - v(k - 2 * h))) / (12.0 * h);
        CAPTURE(t);
        CHECK(rel(kernel_I_derivative(k, l0).value(), fd) < 1e-7);
    }
    CHECK_THROWS_AS(kernel_I_derivative(0.0, l0), DomainError);
    CHECK(kernel_I_derivative(0.1 * l0, l0).sign() < 0);
    double k = 8.0 * l0;
    CHECK(std::fabs(ratio(kernel_I_asymptotic_derivative(k, l0), kernel_I_derivative(k, l0)) - 1.0) < 0.1);
}

TEST_CASE("small-momentum expansion")
{
    for (double l : {1.0, l0}) {
        double c2 = double(oracle::I_quadratic_radial(l));
        double k = 1e-3 * l;
        CHECK(kernel_I_shift(k, l).value() / (k * k) == doctest::Approx(c2).epsilon(1e-5));
        double kk = 2e-3 * l;
        CHECK(kernel_I_derivative(kk, l).value() / (2.0 * kk) == doctest::Approx(c2).epsilon(1e-5));
    }
    CHECK(oracle::I_quadratic_radial(l0) == doctest::Approx(-0.004178).epsilon(1e-3));
}

TEST_CASE("series switch is seamless")
{
    for (double l : {0.5, l0}) {
        double k = series_switch * l;
        for (auto* fn : {&kernel_I1_dot_k, &kernel_I2, &kernel_I3, &kernel_I, &kernel_I_shift, &kernel_I_derivative}) {
            double below = fn(k * (1.0 - 1e-13), l).value();
            double above = fn(k * (1.0 + 1e-13), l).value();
            CHECK(std::fabs(below - above) <= 1e-10 * std::fabs(above));
        }
    }
}

TEST_CASE("two-phonon kernel")
{
    CHECK(kernel_J(l0, l0) == doctest::Approx(-2.1827930121575845532e-4).epsilon(1e-13));
    double j0 = std::sqrt(5.0) * l0 * l0 / (4.0 * std::pow(2.0 * pi, 3) * 243.0);
    CHECK(kernel_J(0.0, l0) == doctest::Approx(-j0).epsilon(1e-14));
    double root = std::sqrt(7.5) * l0;
    CHECK(kernel_J(root * 0.999, l0) < 0.0);
    CHECK(kernel_J(root * 1.001, l0) > 0.0);
    CHECK(std::fabs(kernel_J(root, l0)) < 1e-15);
    for (double t : {0.3, 1.0, 3.0, 6.0}) {
        double k = t * l0, h = 1e-4 * k;
        auto v = [](double x) { return kernel_J(x, l0); };
        double fd = (8.0 * (v(k + h) - v(k - h)) - (v(k + 2 * h) - v(k - 2 * h))) / (12.0 * h);
        CHECK(kernel_J_derivative(k, l0) == doctest::Approx(fd).epsilon(1e-7));
        CHECK(kernel_J_scaled(k, l0).value() == doctest::Approx(kernel_J(k, l0)).epsilon(1e-14));
    }
    CHECK(kernel_J0_exact(1.0) == doctest::Approx(-zeroth::alpha_constant() / (256.0 * std::pow(pi, 4))).epsilon(1e-14));
}

TEST_CASE("Monte Carlo oracle for the two-phonon sum")
{
    auto a = kernel_J_oracle(0.0, 1.0, 200000, 7);
    auto b = kernel_J_oracle(0.0, 1.0, 200000, 7);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
    CHECK(a.samples == 200000);

    auto c = kernel_J_oracle(0.0, 1.0, 200000, 8);
    CHECK(c.value != a.value);
    CHECK(std::fabs(c.value - a.value) < 4.0 * std::hypot(a.std_error, c.std_error));

    auto big = kernel_J_oracle(0.0, 1.0, 2000000);
    CHECK(std::fabs(big.value - kernel_J0_exact(1.0)) < 3.0 * big.std_error);
    CHECK(big.std_error < 2e-7);

    // the oracle scales like lambda^2
    auto wide = kernel_J_oracle(0.0, 2.0, 200000, 7);
    CHECK(wide.value == doctest::Approx(4.0 * a.value).epsilon(1e-12));
}
