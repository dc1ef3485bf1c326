#include "uvreg/sweep.hpp"

#include "uvreg/errors.hpp"
#include "uvreg/zeroth.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <thread>

namespace uvreg::sweep {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::string json_string(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out + "\"";
}

std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

SweepRow failed_row(double g, std::optional<double> lambda, std::string message)
{
    SweepRow row;
    auto fields = {&row.lambda, &row.e0,    &row.k0,    &row.k0_asym,     &row.a_re,
                   &row.a_im,   &row.b_re,  &row.b_im,  &row.e2_re,       &row.e2_im,
                   &row.e2_analytic, &row.e2_singular, &row.ratio, &row.w_half, &row.mass0, &row.mass2};
    for (double* f : fields)
        *f = nan;
    row.g = g;
    if (lambda)
        row.lambda = *lambda;
    row.error = message.empty() ? "error" : std::move(message);
    return row;
}

} // namespace

std::array<double, 17> numeric_fields(const SweepRow& r)
{
    return {r.g,     r.lambda, r.e0,          r.k0,          r.k0_asym, r.a_re,   r.a_im,  r.b_re, r.b_im,
            r.e2_re, r.e2_im,  r.e2_analytic, r.e2_singular, r.ratio,   r.w_half, r.mass0, r.mass2};
}

std::vector<double> grid(double g_min, double g_max, std::size_t points, Scale scale)
{
    if (!(g_min > 0.0) || !(g_max > g_min) || !std::isfinite(g_max))
        throw DomainError("grid needs 0 < g_min < g_max");
    if (points < 2)
        throw DomainError("grid needs at least two points");
    std::vector<double> out(points);
    double n = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        double t = static_cast<double>(i) / n;
        if (scale == Scale::log)
            out[i] = std::exp(std::log(g_min) + t * (std::log(g_max) - std::log(g_min)));
        else
            out[i] = g_min + t * (g_max - g_min);
    }
    // the ends are exactly the requested values
    out.front() = g_min;
    out.back() = g_max;
    return out;
}

SweepRow to_row(const second::IterationResult& r)
{
    SweepRow row;
    row.g = r.params.g;
    row.lambda = r.params.lambda;
    row.e0 = r.e0;
    row.k0 = r.k0.k0;
    row.k0_asym = r.k0.k0_asymptotic;
    row.a_re = r.a.re;
    row.a_im = r.a.im;
    row.b_re = r.b.re;
    row.b_im = r.b.im;
    row.e2_re = r.e2.re;
    row.e2_im = r.e2.im;
    row.e2_analytic = r.e2_analytic;
    row.e2_singular = r.e2_singular;
    row.ratio = r.e2.re / r.e2_analytic;
    row.w_half = r.transition_half_rate;
    row.mass0 = zeroth::mass0(r.params.g);
    row.mass2 = r.mass2;
    if (!r.has_pole)
        row.error = "no_pole";
    return row;
}

SweepRow evaluate(double g, std::optional<double> lambda, const second::Settings& settings)
{
    try {
        return to_row(second::iterate(g, lambda, settings));
    } catch (const std::exception& e) {
        return failed_row(g, lambda, e.what());
    }
}

std::vector<SweepRow> run(const std::vector<double>& gs, std::optional<double> lambda,
                          const second::Settings& settings, std::size_t jobs)
{
    std::vector<SweepRow> rows(gs.size());
    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, gs.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < gs.size(); ++i)
            rows[i] = evaluate(gs[i], lambda, settings);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < gs.size(); i = next++)
            rows[i] = evaluate(gs[i], lambda, settings);
    };
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j)
        pool.emplace_back(worker);
    pool.clear();
    return rows;
}

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_header()
{
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i)
            out += ',';
        out += columns[i];
    }
    return out;
}

std::string to_csv(const SweepRow& row)
{
    std::string out;
    for (double v : numeric_fields(row)) {
        out += format_number(v);
        out += ',';
    }
    return out + csv_field(row.error);
}

std::string to_json(const SweepRow& row)
{
    auto values = numeric_fields(row);
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += json_string(columns[i]);
        out += ':';
        out += std::isfinite(values[i]) ? format_number(values[i]) : "null";
        out += ',';
    }
    out += json_string(columns.back());
    out += ':';
    out += row.ok() ? "null" : json_string(row.error);
    return out + "}";
}

void write(std::ostream& out, const std::vector<SweepRow>& rows, Format format)
{
    if (format == Format::csv) {
        out << csv_header() << '\n';
        for (const auto& r : rows)
            out << to_csv(r) << '\n';
        return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
        out << to_json(rows[i]) << (i + 1 < rows.size() ? ",\n" : "\n");
    out << "]\n";
}

} // namespace uvreg::sweep
