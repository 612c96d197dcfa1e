#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "analytic.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "fd_solver.hpp"
#include "potentials.hpp"
#include "reference_data.hpp"

namespace hqm {

struct RunConfig {
    std::string subcommand;
    std::string model = "coulomb";      // coulomb | oscillator
    std::string method = "analytic";    // sweep only: analytic | fd
    std::string variable = "omega";     // sweep only: omega | m
    double omega = 2.0;
    std::vector<double> omegas;         // potential only: one curve per entry
    double k = 5.0e9;
    int m = 1;
    int n_max = 2;
    double mu = constants.electron_mass;
    double omega0 = 2.0 * pi * 5.0e14;
    double sweep_from = 0.5;
    double sweep_to = 4.0;
    int steps = 15;
    std::optional<double> rmax;
    std::optional<int> npts;
    std::string format = "csv";         // csv | json
    std::string convention = "paper";   // paper | physical
    std::optional<std::string> out_path;
};

using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> warnings;
};

inline void validate_config(const RunConfig& cfg) {
    auto one_of = [](const std::string& v, std::initializer_list<const char*> allowed) {
        for (const char* a : allowed)
            if (v == a) return true;
        return false;
    };
    if (!one_of(cfg.format, {"csv", "json"}))
        throw std::invalid_argument("format must be csv or json");
    if (!one_of(cfg.convention, {"paper", "physical"}))
        throw std::invalid_argument("convention must be paper or physical");
    if (!one_of(cfg.model, {"coulomb", "oscillator"}))
        throw std::invalid_argument("model must be coulomb or oscillator");
    if (!one_of(cfg.method, {"analytic", "fd"}))
        throw std::invalid_argument("method must be analytic or fd");
    if (!one_of(cfg.variable, {"omega", "m"}))
        throw std::invalid_argument("variable must be omega or m");
    if (!std::isfinite(cfg.omega) || !std::isfinite(cfg.k) || !std::isfinite(cfg.omega0) ||
        !std::isfinite(cfg.sweep_from) || !std::isfinite(cfg.sweep_to))
        throw std::invalid_argument("parameters must be finite");
    for (const double w : cfg.omegas)
        if (!std::isfinite(w)) throw std::invalid_argument("parameters must be finite");
    if (!(cfg.mu > 0.0)) throw std::invalid_argument("mu must be positive");
    if (cfg.n_max < 0) throw std::invalid_argument("n-max must be nonnegative");
    if (cfg.npts && *cfg.npts < 1) throw std::invalid_argument("npts must be at least 1");
    if (cfg.rmax && !(*cfg.rmax > 0.0)) throw std::invalid_argument("rmax must be positive");
    if (cfg.subcommand == "sweep" && cfg.variable == "omega" && cfg.steps < 2)
        throw std::invalid_argument("sweep needs at least 2 steps");
}

namespace detail {

inline Cell energy_cell(int n, const ModelParams& p, const std::string& convention) {
    return Cell{convention == "physical" ? energy_physical(n, p) : energy_paper(n, p)};
}

}  // namespace detail

inline Report run_spectrum(const RunConfig& cfg) {
    validate_config(cfg);
    const ModelParams p{cfg.omega, cfg.k, cfg.m, cfg.mu};
    Report rep;
    rep.columns = {"n", "m", "energy_ev", "status"};
    const bool exists = has_bound_states(p);
    for (int n = 0; n <= cfg.n_max; ++n) {
        if (exists) {
            rep.rows.push_back({Cell{static_cast<long long>(n)}, Cell{static_cast<long long>(p.m)},
                                detail::energy_cell(n, p, cfg.convention), Cell{std::string("ok")}});
        } else {
            rep.rows.push_back({Cell{static_cast<long long>(n)}, Cell{static_cast<long long>(p.m)},
                                Cell{}, Cell{std::string("no bound state")}});
        }
    }
    if (!exists)
        rep.warnings.push_back("no bound states exist for omega*k*m <= 0 or m = 0; "
                               "rows carry markers only");
    return rep;
}

inline Report run_table1(const RunConfig& cfg) {
    validate_config(cfg);
    const RadialGrid grid{cfg.rmax.value_or(12.0e-9), cfg.npts.value_or(24000)};
    static constexpr double omegas[3] = {2.0, 3.0, 4.0};
    static constexpr int ms[3] = {1, 2, 3};

    std::vector<std::future<std::vector<double>>> jobs;
    for (const double w : omegas)
        for (const int mm : ms)
            jobs.push_back(std::async(std::launch::async, [w, mm, grid] {
                const ModelParams p{w, 5.0e9, mm, constants.electron_mass};
                const TridiagonalOperator op =
                    assemble([&](double r) { return v_eff_coulomb(r, p); }, grid, p.mu);
                return eigenvalues_below(op, threshold_energy(p), 3).values;
            }));

    Report rep;
    rep.columns = {"omega", "n", "m", "e_num_ev", "e_analyt_ev", "delta_ev"};
    std::size_t job = 0;
    for (const double w : omegas) {
        for (const int mm : ms) {
            const std::vector<double> found = jobs[job++].get();
            const ModelParams p{w, 5.0e9, mm, constants.electron_mass};
            for (int n = 0; n <= 2; ++n) {
                const double ea = energy_paper(n, p);
                std::vector<Cell> row{Cell{w}, Cell{static_cast<long long>(n)},
                                      Cell{static_cast<long long>(mm)}, Cell{}, Cell{ea}, Cell{}};
                if (static_cast<std::size_t>(n) < found.size()) {
                    const double en = -to_ev(found[static_cast<std::size_t>(n)]);
                    row[3] = Cell{en};
                    row[5] = Cell{std::abs(en - ea)};
                } else {
                    char msg[96];
                    std::snprintf(msg, sizeof msg,
                                  "omega=%g m=%d: fewer than %d states below threshold on this grid",
                                  w, mm, n + 1);
                    rep.warnings.push_back(msg);
                }
                rep.rows.push_back(std::move(row));
            }
        }
    }
    return rep;
}

inline Report run_potential(const RunConfig& cfg) {
    validate_config(cfg);
    std::vector<double> omegas = cfg.omegas;
    if (omegas.empty()) {
        if (cfg.model == "coulomb")
            omegas = {0.3, 0.5, 0.7};
        else
            omegas = {1.0, 2.0, 3.0, 4.0, 5.0};
    }
    const RadialGrid grid{cfg.rmax.value_or(2.0e-9), cfg.npts.value_or(400)};
    Report rep;
    rep.columns = {"omega", "r_m", "v_ev"};
    for (const double w : omegas) {
        const ModelParams p{w, cfg.k, cfg.m, cfg.mu};
        const OscillatorParams op = make_oscillator(p, cfg.omega0);
        for (int i = 0; i < grid.npts; ++i) {
            const double r = grid.r(i);
            const double v =
                cfg.model == "coulomb" ? v_eff_coulomb(r, p) : v_eff_oscillator(r, op);
            rep.rows.push_back({Cell{w}, Cell{r}, Cell{to_ev(v)}});
        }
    }
    return rep;
}

inline Report run_density(const RunConfig& cfg) {
    validate_config(cfg);
    const ModelParams p{cfg.omega, cfg.k, cfg.m, cfg.mu};
    Report rep;
    rep.columns = {"n", "r_m", "p_per_m", "peak_r_m", "status"};
    if (!has_bound_states(p)) {
        for (int n = 0; n <= cfg.n_max; ++n)
            rep.rows.push_back(
                {Cell{static_cast<long long>(n)}, Cell{}, Cell{}, Cell{}, Cell{std::string("no bound state")}});
        rep.warnings.push_back("no bound states exist for these parameters");
        return rep;
    }
    const double rho_min = coulomb_parameters(cfg.n_max, p).rho;
    const RadialGrid grid{cfg.rmax.value_or(12.0 / rho_min), cfg.npts.value_or(2000)};
    std::vector<double> radii;
    radii.reserve(static_cast<std::size_t>(grid.npts));
    for (int i = 0; i < grid.npts; ++i) radii.push_back(grid.r(i));
    bool truncated_any = false;
    for (int n = 0; n <= cfg.n_max; ++n) {
        const DensityProfile d = probability_density(n, p, radii);
        const std::string status = d.truncated ? "truncated" : "ok";
        truncated_any = truncated_any || d.truncated;
        for (std::size_t i = 0; i < radii.size(); ++i)
            rep.rows.push_back({Cell{static_cast<long long>(n)}, Cell{radii[i]},
                                Cell{d.density[i]}, Cell{d.peak_r}, Cell{status}});
    }
    if (truncated_any)
        rep.warnings.push_back("grid does not span 10/rho; densities are truncated");
    return rep;
}

inline Report run_sweep(const RunConfig& cfg) {
    validate_config(cfg);
    std::vector<double> params;
    if (cfg.variable == "m") {
        const long m0 = std::lround(std::min(cfg.sweep_from, cfg.sweep_to));
        const long m1 = std::lround(std::max(cfg.sweep_from, cfg.sweep_to));
        for (long v = m0; v <= m1; ++v) params.push_back(static_cast<double>(v));
    } else {
        for (int i = 0; i < cfg.steps; ++i)
            params.push_back(cfg.sweep_from +
                             (cfg.sweep_to - cfg.sweep_from) * i / (cfg.steps - 1.0));
    }

    Report rep;
    rep.columns = {"param", "track", "energy_ev", "overlap", "status"};

    if (cfg.method == "analytic") {
        if (cfg.model != "coulomb")
            throw std::invalid_argument("analytic sweeps support the coulomb model only");
        bool missing = false;
        for (const double value : params) {
            ModelParams p{cfg.omega, cfg.k, cfg.m, cfg.mu};
            if (cfg.variable == "omega")
                p.omega = value;
            else
                p.m = static_cast<int>(std::lround(value));
            for (int n = 0; n <= cfg.n_max; ++n) {
                if (has_bound_states(p)) {
                    rep.rows.push_back({Cell{value}, Cell{static_cast<long long>(n)},
                                        detail::energy_cell(n, p, cfg.convention), Cell{},
                                        Cell{std::string("ok")}});
                } else {
                    missing = true;
                    rep.rows.push_back({Cell{value}, Cell{static_cast<long long>(n)}, Cell{},
                                        Cell{}, Cell{std::string("no bound state")}});
                }
            }
        }
        if (missing)
            rep.warnings.push_back("some sweep points have no bound states; rows carry markers");
        return rep;
    }

    const int count = cfg.n_max + 1;
    double rmax_default, npts_default;
    if (cfg.model == "oscillator") {
        const OscillatorParams probe =
            make_oscillator(ModelParams{cfg.omega, cfg.k, cfg.m, cfg.mu}, cfg.omega0);
        rmax_default = 10.0 * oscillator_length(probe);
        npts_default = 4000;
    } else {
        rmax_default = 12.0e-9;
        npts_default = 8000;
    }
    const RadialGrid grid{cfg.rmax.value_or(rmax_default),
                          cfg.npts.value_or(static_cast<int>(npts_default))};

    std::vector<std::future<std::vector<EigenPair>>> jobs;
    for (const double value : params)
        jobs.push_back(std::async(std::launch::async, [value, &cfg, grid, count] {
            ModelParams p{cfg.omega, cfg.k, cfg.m, cfg.mu};
            if (cfg.variable == "omega")
                p.omega = value;
            else
                p.m = static_cast<int>(std::lround(value));
            if (cfg.model == "oscillator")
                return solve_bound_states(make_oscillator(p, cfg.omega0), grid, count);
            return solve_bound_states(p, grid, count);
        }));

    std::vector<SweepStep> steps;
    steps.reserve(params.size());
    for (std::size_t i = 0; i < params.size(); ++i)
        steps.push_back(SweepStep{params[i], jobs[i].get()});

    const SweepResult res = follow_states(steps);
    const std::size_t ntracks = res.energies.empty() ? 0 : res.energies[0].size();
    if (ntracks < static_cast<std::size_t>(count)) {
        char msg[96];
        std::snprintf(msg, sizeof msg,
                      "state count varies across the sweep; tracks truncated to %zu", ntracks);
        rep.warnings.push_back(msg);
    }
    const bool negate = cfg.convention == "paper" && cfg.model == "coulomb";
    std::vector<std::vector<char>> flagged(res.energies.size(),
                                           std::vector<char>(ntracks, 0));
    for (const TrackWarning& w : res.warnings) {
        flagged[w.step][w.track] = 1;
        char msg[112];
        std::snprintf(msg, sizeof msg,
                      "track %zu overlap %.3f below 0.5 at parameter %.6g; possible discontinuity",
                      w.track, w.overlap, res.parameters[w.step]);
        rep.warnings.push_back(msg);
    }
    for (std::size_t j = 0; j < res.energies.size(); ++j) {
        for (std::size_t t = 0; t < ntracks; ++t) {
            const double e = negate ? -res.energies[j][t] : res.energies[j][t];
            std::vector<Cell> row{Cell{res.parameters[j]}, Cell{static_cast<long long>(t)},
                                  Cell{e}, Cell{}, Cell{std::string("ok")}};
            if (j > 0) row[3] = Cell{res.overlaps[j][t]};
            if (flagged[j][t]) row[4] = Cell{std::string("discontinuity")};
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

inline Report run_oscillator(const RunConfig& cfg) {
    validate_config(cfg);
    const OscillatorParams probe =
        make_oscillator(ModelParams{1.0, cfg.k, cfg.m, cfg.mu}, cfg.omega0);
    const double ell = oscillator_length(probe);
    const RadialGrid grid{cfg.rmax.value_or(10.0 * ell), cfg.npts.value_or(4000)};
    detail::check_resolution(grid.h(), ell, grid.r_max, "oscillator");

    std::vector<std::future<std::vector<double>>> jobs;
    for (const Table2Row& ref : table2)
        jobs.push_back(std::async(std::launch::async, [&ref, &cfg, grid] {
            const ModelParams p{ref.omega, cfg.k, cfg.m, cfg.mu};
            const OscillatorParams op = make_oscillator(p, cfg.omega0);
            const TridiagonalOperator mat =
                assemble([&](double r) { return v_eff_oscillator(r, op); }, grid, p.mu);
            return eigenvalues_below(mat, std::numeric_limits<double>::infinity(), 5).values;
        }));

    Report rep;
    rep.columns = {"omega", "e0_ev", "e1_ev", "e2_ev", "e3_ev", "e4_ev",
                   "ref_e0_ev", "ref_e1_ev", "ref_e2_ev", "ref_e3_ev", "ref_e4_ev", "max_dev_ev"};
    for (std::size_t i = 0; i < table2.size(); ++i) {
        const std::vector<double> vals = jobs[i].get();
        std::vector<Cell> row;
        row.push_back(Cell{table2[i].omega});
        double max_dev = 0.0;
        for (int j = 0; j < 5; ++j) {
            if (static_cast<std::size_t>(j) < vals.size()) {
                const double e = to_ev(vals[static_cast<std::size_t>(j)]);
                row.push_back(Cell{e});
                max_dev = std::max(max_dev, std::abs(e - table2[i].e[static_cast<std::size_t>(j)]));
            } else {
                row.push_back(Cell{});
                rep.warnings.push_back("fewer than 5 modes found at one sweep point");
            }
        }
        for (int j = 0; j < 5; ++j) row.push_back(Cell{table2[i].e[static_cast<std::size_t>(j)]});
        row.push_back(Cell{max_dev});
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

inline Report run_list_reproductions(const RunConfig& cfg) {
    validate_config(cfg);
    Report rep;
    rep.columns = {"item", "subcommand", "example"};
    const char* rows[][3] = {
        {"table1", "table1", "hqm table1"},
        {"table2", "oscillator", "hqm oscillator --k 1e9 --m 1"},
        {"fig1", "potential", "hqm potential --omega 0.3 --omega 0.5 --omega 0.7 --k 5e9 --m 1"},
        {"fig2", "density", "hqm density --omega 0.5 --k 5e9 --m 1 --n-max 2"},
        {"fig3", "sweep",
         "hqm sweep --method analytic --variable m --from 1 --to 6 --omega 2 --k 5e9 --n-max 2"},
        {"fig4", "sweep",
         "hqm sweep --method analytic --variable omega --from 0.5 --to 4 --steps 25 --m 1 --k 5e9"},
        {"fig5", "potential",
         "hqm potential --model oscillator --omega 1 --omega 2 --omega 3 --omega 4 --omega 5 "
         "--k 1e10 --omega0 5.0265482e13 --m 1"},
        {"fig6", "sweep",
         "hqm sweep --model oscillator --method fd --variable m --from -6 --to 6 --omega 5 "
         "--k 1e9 --n-max 3"},
        {"fig7", "sweep",
         "hqm sweep --model oscillator --method fd --variable omega --from 1 --to 15.204082 "
         "--steps 25 --k 1e9 --m 1 --n-max 4"},
    };
    for (const auto& r : rows)
        rep.rows.push_back({Cell{std::string(r[0])}, Cell{std::string(r[1])}, Cell{std::string(r[2])}});
    return rep;
}

namespace detail {

inline std::string format_cell_csv(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return "";
    if (std::holds_alternative<double>(c)) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.6e", std::get<double>(c));
        return buf;
    }
    if (std::holds_alternative<long long>(c)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", std::get<long long>(c));
        return buf;
    }
    return std::get<std::string>(c);
}

}  // namespace detail

inline std::string to_csv(const Report& rep) {
    std::string out;
    for (std::size_t i = 0; i < rep.columns.size(); ++i) {
        if (i) out += ',';
        out += rep.columns[i];
    }
    out += '\n';
    for (const std::vector<Cell>& row : rep.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += detail::format_cell_csv(row[i]);
        }
        out += '\n';
    }
    return out;
}

inline std::string to_json(const Report& rep) {
    nlohmann::json arr = nlohmann::json::array();
    for (const std::vector<Cell>& row : rep.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const Cell& c = row[i];
            if (std::holds_alternative<std::monostate>(c))
                obj[rep.columns[i]] = nullptr;
            else if (std::holds_alternative<double>(c))
                obj[rep.columns[i]] = std::get<double>(c);
            else if (std::holds_alternative<long long>(c))
                obj[rep.columns[i]] = std::get<long long>(c);
            else
                obj[rep.columns[i]] = std::get<std::string>(c);
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

inline Report run_report(const RunConfig& cfg) {
    if (cfg.subcommand == "spectrum") return run_spectrum(cfg);
    if (cfg.subcommand == "table1") return run_table1(cfg);
    if (cfg.subcommand == "potential") return run_potential(cfg);
    if (cfg.subcommand == "density") return run_density(cfg);
    if (cfg.subcommand == "sweep") return run_sweep(cfg);
    if (cfg.subcommand == "oscillator") return run_oscillator(cfg);
    if (cfg.subcommand == "list-reproductions") return run_list_reproductions(cfg);
    throw std::invalid_argument("unknown subcommand: " + cfg.subcommand);
}

// Serializes to the configured sink; exit status 0, or 4 when the report
// carries warnings (partial results).
inline int write_report(const Report& rep, const RunConfig& cfg) {
    const std::string payload = cfg.format == "csv" ? to_csv(rep) : to_json(rep);
    if (cfg.out_path) {
        std::ofstream f(*cfg.out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + *cfg.out_path);
        f << payload;
    } else {
        std::cout << payload;
    }
    for (const std::string& w : rep.warnings) std::cerr << "warning: " << w << "\n";
    return rep.warnings.empty() ? 0 : 4;
}

}  // namespace hqm
