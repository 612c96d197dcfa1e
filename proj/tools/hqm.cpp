#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <hqm.hpp>

namespace {

void add_common_output(CLI::App* sub, hqm::RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "Output format: csv or json");
    sub->add_option("--out", cfg.out_path, "Write the table to this file instead of stdout");
}

void add_grid_options(CLI::App* sub, hqm::RunConfig& cfg) {
    sub->add_option("--rmax", cfg.rmax, "Domain radius in meters");
    sub->add_option("--npts", cfg.npts, "Number of interior grid points");
}

void add_model_options(CLI::App* sub, hqm::RunConfig& cfg) {
    sub->add_option("--omega", cfg.omega, "Twist parameter (dimensionless)");
    sub->add_option("--k", cfg.k, "Axial wavenumber in 1/m");
    sub->add_option("--m", cfg.m, "Angular quantum number");
    sub->add_option("--mu", cfg.mu, "Particle mass in kg");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound states of a quantum particle in a helically twisted waveguide"};
    app.require_subcommand(0, 1);
    bool list_flag = false;
    app.add_flag("--list-reproductions", list_flag,
                 "List the published tables and figures this tool reproduces");

    hqm::RunConfig cfg;

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Analytic bound-state energies for one parameter set");
    add_model_options(spectrum, cfg);
    spectrum->add_option("--n-max", cfg.n_max, "Highest radial quantum number");
    spectrum->add_option("--convention", cfg.convention,
                         "Energy convention: paper (binding, positive threshold) or physical");
    add_common_output(spectrum, cfg);

    CLI::App* table1 = app.add_subcommand(
        "table1", "Numeric vs analytic energies over omega in {2,3,4}, n,m in {0..2}x{1..3}");
    add_grid_options(table1, cfg);
    add_common_output(table1, cfg);

    CLI::App* potential = app.add_subcommand(
        "potential", "Effective radial potential curves");
    potential->add_option("--model", cfg.model, "coulomb or oscillator");
    potential->add_option("--omega", cfg.omegas, "Twist value; repeat for several curves");
    potential->add_option("--k", cfg.k, "Axial wavenumber in 1/m");
    potential->add_option("--m", cfg.m, "Angular quantum number");
    potential->add_option("--mu", cfg.mu, "Particle mass in kg");
    potential->add_option("--omega0", cfg.omega0, "Oscillator frequency in rad/s");
    add_grid_options(potential, cfg);
    add_common_output(potential, cfg);

    CLI::App* density = app.add_subcommand(
        "density", "Radial probability densities of the lowest bound states");
    add_model_options(density, cfg);
    density->add_option("--n-max", cfg.n_max, "Highest radial quantum number");
    add_grid_options(density, cfg);
    add_common_output(density, cfg);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Energies along a parameter sweep, with state tracking for fd");
    sweep->add_option("--model", cfg.model, "coulomb or oscillator");
    sweep->add_option("--method", cfg.method, "analytic or fd");
    sweep->add_option("--variable", cfg.variable, "Swept parameter: omega or m");
    sweep->add_option("--from", cfg.sweep_from, "Sweep start");
    sweep->add_option("--to", cfg.sweep_to, "Sweep end");
    sweep->add_option("--steps", cfg.steps, "Number of sweep points (omega sweeps)");
    add_model_options(sweep, cfg);
    sweep->add_option("--n-max", cfg.n_max, "Highest state index to follow");
    sweep->add_option("--omega0", cfg.omega0, "Oscillator frequency in rad/s");
    sweep->add_option("--convention", cfg.convention,
                      "Energy convention: paper or physical");
    add_grid_options(sweep, cfg);
    add_common_output(sweep, cfg);

    CLI::App* oscillator = app.add_subcommand(
        "oscillator", "Lowest five oscillator modes against published reference values");
    oscillator->add_option("--k", cfg.k, "Axial wavenumber in 1/m");
    oscillator->add_option("--m", cfg.m, "Angular quantum number");
    oscillator->add_option("--mu", cfg.mu, "Particle mass in kg");
    oscillator->add_option("--omega0", cfg.omega0, "Oscillator frequency in rad/s");
    add_grid_options(oscillator, cfg);
    add_common_output(oscillator, cfg);

    CLI::App* list_cmd = app.add_subcommand(
        "list-reproductions", "List the published tables and figures this tool reproduces");
    add_common_output(list_cmd, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (spectrum->parsed())
        cfg.subcommand = "spectrum";
    else if (table1->parsed())
        cfg.subcommand = "table1";
    else if (potential->parsed())
        cfg.subcommand = "potential";
    else if (density->parsed()) {
        cfg.subcommand = "density";
        if (density->count("--omega") == 0) cfg.omega = 0.5;
    } else if (sweep->parsed())
        cfg.subcommand = "sweep";
    else if (oscillator->parsed()) {
        cfg.subcommand = "oscillator";
        if (oscillator->count("--k") == 0) cfg.k = 1.0e9;
    } else if (list_cmd->parsed() || list_flag)
        cfg.subcommand = "list-reproductions";
    else {
        std::cerr << app.help();
        return 2;
    }

    try {
        const hqm::Report rep = hqm::run_report(cfg);
        return hqm::write_report(rep, cfg);
    } catch (const hqm::convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hqm::under_resolved_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
