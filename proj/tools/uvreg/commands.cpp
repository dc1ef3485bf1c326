#include "uvreg/commands.hpp"

#include "uvreg/checks.hpp"
#include "uvreg/errors.hpp"
#include "uvreg/kernels.hpp"
#include "uvreg/model.hpp"
#include "uvreg/output.hpp"
#include "uvreg/second.hpp"
#include "uvreg/sweep.hpp"
#include "uvreg/zeroth.hpp"

#include <cmath>
#include <exception>
#include <ios>
#include <stdexcept>

namespace uvreg::cli {

namespace {

struct BadArguments : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string pick_format(const Common& c, std::string fallback, std::initializer_list<const char*> allowed)
{
    std::string f = c.format.empty() ? fallback : c.format;
    for (const char* a : allowed)
        if (f == a)
            return f;
    throw BadArguments("unsupported --format " + f + " for this command");
}

void emit(const Record& r, const std::string& format, std::ostream& out)
{
    if (format == "json")
        out << r.json() << '\n';
    else
        r.write_text(out);
}

second::Settings settings_from(const Common& c)
{
    second::Settings s;
    s.rel_tol = c.tol;
    return s;
}

void require_weak_coupling(double g)
{
    if (!(g > 0.0 && g < 1.0))
        throw BadArguments("--g must satisfy 0 < g < 1");
}

} // namespace

int cmd_e0(double g, std::optional<double> lambda, const Common& c, std::ostream& out)
{
    if (!(g >= 0.0) || !std::isfinite(g))
        throw BadArguments("--g must be finite and non-negative");
    std::string format = pick_format(c, "text", {"text", "json"});
    auto z = zeroth::solve(g, lambda);
    Record r;
    r.add("g", g)
        .add("lambda", z.lambda_opt)
        .add("lambda_optimized", !lambda.has_value())
        .add("e0_weak", z.e0_weak)
        .add("e0_full", z.e0_full)
        .add("mass0", z.mass0);
    emit(r, format, out);
    return exit_ok;
}

int cmd_e2(double g, std::optional<double> lambda, const Common& c, std::ostream& out)
{
    require_weak_coupling(g);
    std::string format = pick_format(c, "csv", {"csv", "json"});
    auto row = sweep::to_row(second::iterate(g, lambda, settings_from(c)));
    sweep::write(out, {row}, format == "json" ? sweep::Format::json : sweep::Format::csv);
    return exit_ok;
}

int cmd_sweep(const SweepArgs& a, const Common& c, std::ostream& out, std::ostream& log)
{
    if (!(a.g_min > 0.0 && a.g_min < a.g_max && a.g_max < 1.0))
        throw BadArguments("sweep needs 0 < --g-min < --g-max < 1");
    if (a.points < 2)
        throw BadArguments("--points must be at least 2");
    if (a.scale != "log" && a.scale != "linear")
        throw BadArguments("--scale must be log or linear");
    std::string format = pick_format(c, "csv", {"csv", "json"});
    auto scale = a.scale == "log" ? sweep::Scale::log : sweep::Scale::linear;
    auto rows = sweep::run(sweep::grid(a.g_min, a.g_max, a.points, scale), a.lambda, settings_from(c), c.jobs);
    sweep::write(out, rows, format == "json" ? sweep::Format::json : sweep::Format::csv);
    out.flush();
    if (!out)
        throw std::ios_base::failure("write failed");

    std::size_t failed = 0;
    for (const auto& r : rows)
        if (!r.ok() && r.error != "no_pole")
            ++failed;
    if (failed) {
        log << failed << " of " << rows.size() << " rows failed; see the error column\n";
        return exit_no_convergence;
    }
    return exit_ok;
}

int cmd_check(Level level, const Common& c, std::ostream& out)
{
    std::string format = pick_format(c, "text", {"text", "json"});
    auto lines = run_checks(level, c.seed, c.tol);
    bool all = true;
    if (format == "json")
        out << "[\n";
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& l = lines[i];
        all = all && l.pass;
        Record r;
        r.add("check", l.name)
            .add("pass", l.pass)
            .add("measured", l.measured)
            .add("expected", l.expected)
            .add("tolerance", l.tolerance);
        if (format == "json") {
            out << r.json() << (i + 1 < lines.size() ? ",\n" : "\n");
        } else {
            out << (l.pass ? "PASS  " : "FAIL  ") << l.name << "  measured=" << sweep::format_number(l.measured)
                << "  expected=" << sweep::format_number(l.expected)
                << "  tol=" << sweep::format_number(l.tolerance) << '\n';
        }
    }
    if (format == "json")
        out << "]\n";
    return all ? exit_ok : exit_check_failed;
}

int cmd_kernels(const std::vector<double>& ks, std::optional<double> lambda, std::optional<double> g,
                const Common& c, std::ostream& out)
{
    if (ks.empty())
        throw BadArguments("--k needs at least one momentum");
    for (double k : ks)
        if (!(k >= 0.0) || !std::isfinite(k))
            throw BadArguments("--k values must be finite and non-negative");
    std::string format = pick_format(c, "text", {"text", "json"});
    double l = lambda ? *lambda : (g ? zeroth::lambda_opt(*g) : zeroth::lambda_limit());

    const char* names[] = {"k", "kI1", "I2", "I3", "I", "dI", "J", "I_asym", "asym_ratio"};
    if (format == "json")
        out << "[\n";
    else {
        for (const char* n : names)
            out << n << (n == names[8] ? "\n" : "\t");
    }
    for (std::size_t i = 0; i < ks.size(); ++i) {
        double k = ks[i];
        Scaled full = kernels::kernel_I(k, l);
        std::vector<std::string> cells{sweep::format_number(k)};
        if (k > 0.0) {
            Scaled asym = kernels::kernel_I_asymptotic(k, l);
            cells.push_back(scaled_text(kernels::kernel_I1_dot_k(k, l)));
            cells.push_back(scaled_text(kernels::kernel_I2(k, l)));
            cells.push_back(scaled_text(kernels::kernel_I3(k, l)));
            cells.push_back(scaled_text(full));
            cells.push_back(scaled_text(kernels::kernel_I_derivative(k, l)));
            cells.push_back(scaled_text(kernels::kernel_J_scaled(k, l)));
            cells.push_back(scaled_text(asym));
            cells.push_back(sweep::format_number((asym / full).value()));
        } else {
            // only the sum has a k = 0 value; it equals e0_weak/g^2
            cells.insert(cells.end(), {"-", "-", "-", scaled_text(full), scaled_text(Scaled{}),
                                       scaled_text(kernels::kernel_J_scaled(0.0, l)), "-", "-"});
        }
        if (format == "json") {
            Record r;
            r.add("lambda", l).add("k", k);
            for (std::size_t j = 1; j < cells.size(); ++j)
                r.add(names[j], cells[j]);
            out << r.json() << (i + 1 < ks.size() ? ",\n" : "\n");
        } else {
            for (std::size_t j = 0; j < cells.size(); ++j)
                out << cells[j] << (j + 1 < cells.size() ? "\t" : "\n");
        }
    }
    if (format == "json")
        out << "]\n";
    return exit_ok;
}

int cmd_mass(double g, std::optional<double> lambda, const Common& c, std::ostream& out)
{
    if (!(g >= 0.0 && g < 1.0))
        throw BadArguments("--g must satisfy 0 <= g < 1");
    std::string format = pick_format(c, "text", {"text", "json"});
    double l = lambda ? *lambda : zeroth::lambda_opt(g);
    Record r;
    r.add("g", g).add("lambda", l).add("mass0_coefficient", zeroth::mass0_coefficient()).add("mass0", zeroth::mass0(g));
    if (g > 0.0) {
        auto fit = zeroth::mass0_fit(g, l, std::min(c.tol, 1e-12));
        double k0 = second::cutoff_k0(g, l, settings_from(c)).k0;
        r.add("mass0_fit_coefficient", fit.coefficient)
            .add("k0", k0)
            .add("mass2_coefficient", second::mass2_coefficient(k0))
            .add("mass2", second::mass2(g, k0))
            .add("mass2_first_order", second::mass2_first_order(g, k0));
    } else {
        r.add("mass2", 1.0);
    }
    r.add("pt_mass", model::pt_mass(g));
    emit(r, format, out);
    return exit_ok;
}

int cmd_pt(double p, double cutoff, double g, const Common& c, std::ostream& out)
{
    if (!(p >= 0.0 && p < 1.0))
        throw BadArguments("--p must satisfy 0 <= p < 1");
    if (!(cutoff >= 0.0))
        throw BadArguments("--cutoff must be non-negative");
    if (!(g >= 0.0))
        throw BadArguments("--g must be non-negative");
    std::string format = pick_format(c, "text", {"text", "json"});
    Record r;
    r.add("g", g)
        .add("p", p)
        .add("cutoff", cutoff)
        .add("self_energy", model::pt_self_energy(p, cutoff, g))
        .add("pt_mass", model::pt_mass(g));
    emit(r, format, out);
    return exit_ok;
}

int run_guarded(const std::function<int()>& body, std::ostream& err)
{
    try {
        return body();
    } catch (const BadArguments& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_arguments;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_arguments;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return exit_io_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_no_convergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_no_convergence;
    }
}

} // namespace uvreg::cli
