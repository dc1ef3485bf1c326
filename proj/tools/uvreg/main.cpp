#include "uvreg/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace uvreg::cli;

namespace {

struct Flags {
    Common common;
    double g = 0.0;
    std::optional<double> lambda;
    SweepArgs sweep;
    std::vector<double> ks;
    std::string level = "fast";
    double p = 0.0;
    double cutoff = 0.0;
    std::string out;
};

void add_common(CLI::App* cmd, Flags& f)
{
    cmd->add_option("--tol", f.common.tol, "Relative tolerance of the physics integrals")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--format", f.common.format, "Output format: text, json or csv depending on the command");
    cmd->add_option("--out", f.out, "Write the report to this file instead of stdout");
    cmd->add_option("--seed", f.common.seed, "Seed of the J Monte Carlo oracle")->capture_default_str();
    cmd->add_option("--jobs", f.common.jobs, "Worker threads for sweeps, 0 for all cores")->capture_default_str();
}

void add_lambda(CLI::App* cmd, Flags& f)
{
    cmd->add_option("--lambda", f.lambda, "Trial width; defaults to the variational optimum")
        ->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Self-consistent ultraviolet regularization of a particle coupled to a scalar field"};
    app.require_subcommand(1);
    Flags f;

    auto e0 = app.add_subcommand("e0", "Zeroth-order energy, optimal width and mass");
    e0->add_option("--g", f.g, "Coupling constant")->required();
    add_lambda(e0, f);

    auto e2 = app.add_subcommand("e2", "Second-iteration complex energy at one coupling");
    e2->add_option("--g", f.g, "Coupling constant")->required();
    add_lambda(e2, f);

    auto sw = app.add_subcommand("sweep", "Second iteration over a grid of couplings");
    sw->add_option("--g-min", f.sweep.g_min, "Smallest coupling")->capture_default_str();
    sw->add_option("--g-max", f.sweep.g_max, "Largest coupling")->capture_default_str();
    sw->add_option("--points", f.sweep.points, "Number of grid points")->capture_default_str();
    sw->add_option("--scale", f.sweep.scale, "Grid spacing: log or linear")->capture_default_str();
    add_lambda(sw, f);

    auto check = app.add_subcommand("check", "Oracle and identity checks");
    check->add_option("--level", f.level, "fast or full")->check(CLI::IsMember({"fast", "full"}))->capture_default_str();

    auto kern = app.add_subcommand("kernels", "Tabulate the kernels in scaled notation");
    kern->add_option("--k", f.ks, "Momenta, comma separated")->delimiter(',')->required();
    kern->add_option("--g", f.g, "Coupling used to pick the optimal width when --lambda is absent");
    add_lambda(kern, f);

    auto mass = app.add_subcommand("mass", "Zeroth and second-iteration effective masses");
    mass->add_option("--g", f.g, "Coupling constant")->required();
    add_lambda(mass, f);

    auto pt = app.add_subcommand("pt", "Perturbative self energy with a sharp momentum cutoff");
    pt->add_option("--g", f.g, "Coupling constant")->required();
    pt->add_option("--p", f.p, "Total momentum")->capture_default_str();
    pt->add_option("--cutoff", f.cutoff, "Momentum cutoff K")->required();

    for (auto* cmd : {e0, e2, sw, check, kern, mass, pt})
        add_common(cmd, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_bad_arguments;
    }

    std::ofstream file;
    if (!f.out.empty()) {
        file.open(f.out, std::ios::out | std::ios::trunc);
        if (!file) {
            std::cerr << "error: cannot open " << f.out << " for writing\n";
            return exit_io_error;
        }
    }
    std::ostream& out = f.out.empty() ? std::cout : file;

    return run_guarded(
        [&]() -> int {
            if (*e0)
                return cmd_e0(f.g, f.lambda, f.common, out);
            if (*e2)
                return cmd_e2(f.g, f.lambda, f.common, out);
            if (*sw) {
                f.sweep.lambda = f.lambda;
                return cmd_sweep(f.sweep, f.common, out, std::cerr);
            }
            if (*check)
                return cmd_check(f.level == "full" ? Level::full : Level::fast, f.common, out);
            if (*kern) {
                auto g = kern->count("--g") ? std::optional<double>(f.g) : std::nullopt;
                return cmd_kernels(f.ks, f.lambda, g, f.common, out);
            }
            if (*mass)
                return cmd_mass(f.g, f.lambda, f.common, out);
            return cmd_pt(f.p, f.cutoff, f.g, f.common, out);
        },
        std::cerr);
}
