#pragma once

#include "uvreg/second.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace uvreg::sweep {

enum class Scale { linear, log };
enum class Format { csv, json };

struct SweepRow {
    double g = 0.0;
    double lambda = 0.0;
    double e0 = 0.0;
    double k0 = 0.0;
    double k0_asym = 0.0;
    double a_re = 0.0;
    double a_im = 0.0;
    double b_re = 0.0;
    double b_im = 0.0;
    double e2_re = 0.0;
    double e2_im = 0.0;
    double e2_analytic = 0.0;
    double e2_singular = 0.0;
    double ratio = 0.0;
    double w_half = 0.0;
    double mass0 = 0.0;
    double mass2 = 0.0;
    // empty on success
    std::string error;

    bool ok() const { return error.empty(); }
};

inline constexpr std::array<std::string_view, 18> columns = {
    "g",     "lambda", "e0",          "k0",          "k0_asym", "a_re",   "a_im",  "b_re",  "b_im",
    "e2_re", "e2_im",  "e2_analytic", "e2_singular", "ratio",   "w_half", "mass0", "mass2", "error"};

// The 17 numeric fields in column order.
std::array<double, 17> numeric_fields(const SweepRow& row);

std::vector<double> grid(double g_min, double g_max, std::size_t points, Scale scale);

SweepRow to_row(const second::IterationResult& r);

// Never throws for physics failures; they land in the error column.
SweepRow evaluate(double g, std::optional<double> lambda, const second::Settings& settings);

// Rows come back in the order of gs whatever the number of workers.
std::vector<SweepRow> run(const std::vector<double>& gs, std::optional<double> lambda,
                          const second::Settings& settings, std::size_t jobs);

// %.17g; NaN and infinities as nan, inf, -inf
std::string format_number(double v);

std::string csv_header();
std::string to_csv(const SweepRow& row);
std::string to_json(const SweepRow& row);

void write(std::ostream& out, const std::vector<SweepRow>& rows, Format format);

} // namespace uvreg::sweep
