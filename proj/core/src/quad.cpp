#include "uvreg/quad.hpp"

#include "uvreg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/toms748_solve.hpp>

namespace uvreg::quad {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double tiny = std::numeric_limits<double>::min();

struct Segment {
    double a, b;
    double value, error, resabs;
};

bool by_error(const Segment& x, const Segment& y) { return x.error < y.error; }

// 15 point Kronrod rule with the embedded 7 point Gauss rule; error
// heuristics follow QUADPACK's qk15.
Segment kronrod15(const Function& f, double a, double b)
{
    using kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
    using gauss = boost::math::quadrature::gauss<double, 7>;
    const auto& xk = kronrod::abscissa();
    const auto& wk = kronrod::weights();
    const auto& wg = gauss::weights();

    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);

    double fv1[8], fv2[8];
    double fc = f(c);
    double resk = wk[0] * fc;
    double resg = wg[0] * fc;
    double resabs = wk[0] * std::fabs(fc);
    for (int j = 1; j < 8; ++j) {
        double dx = h * xk[j];
        double f1 = f(c - dx);
        double f2 = f(c + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        resk += wk[j] * (f1 + f2);
        if (j % 2 == 0)
            resg += wg[j / 2] * (f1 + f2);
        resabs += wk[j] * (std::fabs(f1) + std::fabs(f2));
    }
    double mean = 0.5 * resk;
    double resasc = wk[0] * std::fabs(fc - mean);
    for (int j = 1; j < 8; ++j)
        resasc += wk[j] * (std::fabs(fv1[j] - mean) + std::fabs(fv2[j] - mean));

    double ah = std::fabs(h);
    double value = resk * h;
    resabs *= ah;
    resasc *= ah;
    double err = std::fabs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > tiny / (50.0 * eps))
        err = std::max(50.0 * eps * resabs, err);

    if (!std::isfinite(value) || !std::isfinite(err))
        throw NonConvergence("non-finite integrand on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    return {a, b, value, err, resabs};
}

QuadResult adaptive(const Function& f, double a, double b, const Options& opt)
{
    std::vector<Segment> heap;
    std::vector<Segment> frozen;
    heap.push_back(kronrod15(f, a, b));
    std::size_t evals = 15;

    double total = heap[0].value;
    double err = heap[0].error;
    double resabs = heap[0].resabs;

    auto target = [&] { return std::max({opt.rel_tol * std::fabs(total), opt.abs_tol, 100.0 * eps * resabs}); };

    std::size_t iter = 0;
    while (err > target()) {
        if (heap.empty())
            throw NonConvergence("quadrature stalled at roundoff level; error " + std::to_string(err));
        if (evals + 30 > opt.max_evaluations)
            throw NonConvergence("quadrature exceeded " + std::to_string(opt.max_evaluations) +
                                 " evaluations; error " + std::to_string(err));

        std::pop_heap(heap.begin(), heap.end(), by_error);
        Segment s = heap.back();
        heap.pop_back();

        double mid = 0.5 * (s.a + s.b);
        if (!(mid > s.a && mid < s.b) || (s.b - s.a) < 100.0 * eps * std::max(std::fabs(s.a), std::fabs(s.b))) {
            frozen.push_back(s);
            continue;
        }
        Segment l = kronrod15(f, s.a, mid);
        Segment r = kronrod15(f, mid, s.b);
        evals += 30;

        total += l.value + r.value - s.value;
        err += l.error + r.error - s.error;
        resabs += l.resabs + r.resabs - s.resabs;

        heap.push_back(l);
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(r);
        std::push_heap(heap.begin(), heap.end(), by_error);

        // keep the running sums from drifting
        if (++iter % 64 == 0) {
            total = err = resabs = 0.0;
            for (const auto* set : {&heap, &frozen})
                for (const auto& seg : *set) {
                    total += seg.value;
                    err += seg.error;
                    resabs += seg.resabs;
                }
        }
    }

    QuadResult out;
    out.evaluations = evals;
    // pairwise-ish recomputation: sort by magnitude to limit rounding
    std::vector<double> vals;
    vals.reserve(heap.size() + frozen.size());
    for (const auto* set : {&heap, &frozen})
        for (const auto& seg : *set) {
            vals.push_back(seg.value);
            out.error_estimate += seg.error;
        }
    std::sort(vals.begin(), vals.end(), [](double x, double y) { return std::fabs(x) < std::fabs(y); });
    for (double v : vals)
        out.value += v;
    return out;
}

double numeric_slope(const Function& f, double x, double h)
{
    // Richardson table on central differences, h, h/2, h/4
    double d[3];
    for (int i = 0; i < 3; ++i) {
        double hi = h / double(1 << i);
        d[i] = (f(x + hi) - f(x - hi)) / (2.0 * hi);
    }
    double r1 = (4.0 * d[1] - d[0]) / 3.0;
    double r2 = (4.0 * d[2] - d[1]) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

} // namespace

QuadResult integrate_finite(const Function& f, double a, double b, const Options& opt)
{
    if (!(a < b))
        throw DomainError("integrate_finite requires a < b");
    return adaptive(f, a, b, opt);
}

QuadResult integrate_finite(const Function& f, double a, double b, double rel_tol)
{
    Options opt;
    opt.rel_tol = rel_tol;
    return integrate_finite(f, a, b, opt);
}

QuadResult integrate_semi_infinite(const Function& f, double a, const Options& opt, double scale)
{
    if (!(scale > 0.0))
        throw DomainError("integrate_semi_infinite requires a positive scale");
    auto g = [&](double t) {
        if (t >= 1.0)
            return 0.0;
        double u = 1.0 - t;
        double x = a + scale * t / u;
        if (!std::isfinite(x))
            return 0.0;
        double fx = f(x);
        return fx == 0.0 ? 0.0 : fx * scale / (u * u);
    };
    return adaptive(g, 0.0, 1.0, opt);
}

QuadResult integrate_semi_infinite(const Function& f, double a, double rel_tol)
{
    Options opt;
    opt.rel_tol = rel_tol;
    return integrate_semi_infinite(f, a, opt);
}

PVResult integrate_principal_value(const Function& f_num, const Function& f_den, double pole, double a, double b,
                                   const PVOptions& opt)
{
    if (!(a < pole && pole < b))
        throw PoleNotBracketed("pole lies outside the integration interval");
    double left = f_den(0.5 * (a + pole));
    double right = f_den(0.5 * (pole + b));
    if (!(left * right < 0.0))
        throw PoleNotBracketed("denominator does not change sign across the pole");

    double lo = a, hi = b;
    if (opt.window) {
        lo = std::max(a, pole - *opt.window);
        hi = std::min(b, pole + *opt.window);
    }

    double slope = opt.den_slope ? *opt.den_slope
                                 : numeric_slope(f_den, pole, 0.05 * std::min(pole - lo, hi - pole));
    double scale = std::max(std::fabs(f_den(lo)), std::fabs(f_den(hi))) / std::max(pole - lo, hi - pole);
    if (!(std::fabs(slope) > 1e-12 * scale))
        throw DegeneratePole("denominator slope vanishes at the pole");

    double num_at_pole = f_num(pole);
    double r = num_at_pole / slope;
    auto ratio = [&](double x) { return f_num(x) / f_den(x); };
    auto subtracted = [&](double x) { return f_num(x) / f_den(x) - r / (x - pole); };

    PVResult out;
    out.residue_coefficient = num_at_pole / std::fabs(slope);
    auto add = [&](const QuadResult& q) {
        out.principal_value += q.value;
        out.error_estimate += q.error_estimate;
        out.evaluations += q.evaluations;
    };
    // the subtracted part is O(|r|) at most; rounding in r leaves a tiny 1/x
    // remainder that a pure relative target would chase forever
    Options near = opt.quad;
    near.abs_tol = std::max(near.abs_tol, near.rel_tol * std::fabs(r));
    add(adaptive(subtracted, lo, pole, near));
    add(adaptive(subtracted, pole, hi, near));
    out.principal_value += r * std::log((hi - pole) / (pole - lo));
    if (lo > a)
        add(adaptive(ratio, a, lo, opt.quad));
    if (hi < b)
        add(adaptive(ratio, hi, b, opt.quad));
    return out;
}

PVResult integrate_principal_value(const Function& f_num, const Function& f_den, double pole, double a, double b,
                                   double rel_tol)
{
    PVOptions opt;
    opt.quad.rel_tol = rel_tol;
    return integrate_principal_value(f_num, f_den, pole, a, b, opt);
}

double find_root(const Function& f, double lo, double hi, double tol, std::size_t max_iterations)
{
    if (lo > hi)
        std::swap(lo, hi);
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if (!(flo * fhi < 0.0))
        throw NoSignChange("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");

    auto done = [tol](double x, double y) {
        return std::fabs(y - x) <= std::max(tol, 4.0 * eps * std::max(std::fabs(x), std::fabs(y)));
    };
    boost::uintmax_t iters = max_iterations;
    auto bracket = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, done, iters);
    if (!done(bracket.first, bracket.second))
        throw NonConvergence("root finder hit the iteration cap");
    return 0.5 * (bracket.first + bracket.second);
}

double minimize_scalar(const Function& f, double lo, double hi, double tol, std::size_t max_iterations)
{
    if (!(lo < hi))
        throw DomainError("minimize_scalar requires lo < hi");
    double span = std::max({std::fabs(lo), std::fabs(hi), 1.0});
    int bits = int(std::ceil(1.0 - std::log2(tol / span)));
    bits = std::clamp(bits, 4, std::numeric_limits<double>::digits / 2);
    boost::uintmax_t iters = max_iterations;
    auto best = boost::math::tools::brent_find_minima(f, lo, hi, bits, iters);
    if (iters >= max_iterations)
        throw NonConvergence("minimiser hit the iteration cap");
    return best.first;
}

} // namespace uvreg::quad
