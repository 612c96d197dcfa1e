#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "constants.hpp"
#include "errors.hpp"
#include "potentials.hpp"
#include "specfun.hpp"

namespace hqm {

struct CoulombParameters {
    double rho;  // 1/m
    double a;    // -n for a bound state
    double b;    // 1 + 2|m|
    double N;    // n + |m| + 1/2
};

inline CoulombParameters coulomb_parameters(int n, const ModelParams& p) {
    if (n < 0) throw std::domain_error("coulomb_parameters: n must be nonnegative");
    if (std::abs(p.m) < 1)
        throw no_bound_state_error("coulomb_parameters: no bound states for m = 0");
    if (!(p.omega * p.k * p.m > 0.0))
        throw no_bound_state_error("coulomb_parameters: bound states require omega*k*m > 0");
    CoulombParameters c;
    c.N = n + std::abs(p.m) + 0.5;
    c.rho = p.k * static_cast<double>(p.m) * p.omega / c.N;
    c.a = -static_cast<double>(n);
    c.b = 1.0 + 2.0 * std::abs(p.m);
    return c;
}

// The published closed form, evaluated verbatim; a total function with no
// existence gate:
//   E = -(k^2 hbar^2/2mu) [4m^2 + (1+2n)(1+omega^2)(1+2n+4|m|)] / (1+2n+2|m|)^2
inline double energy_paper_j(int n, const ModelParams& p) {
    if (n < 0) throw std::domain_error("energy_paper: n must be nonnegative");
    const double md = static_cast<double>(p.m);
    const double am = std::abs(md);
    const double num = 4.0 * md * md +
                       (1.0 + 2.0 * n) * (1.0 + p.omega * p.omega) * (1.0 + 2.0 * n + 4.0 * am);
    const double den = 1.0 + 2.0 * n + 2.0 * am;
    return -kinetic_factor(p.mu) * p.k * p.k * num / (den * den);
}

inline double energy_paper(int n, const ModelParams& p) { return to_ev(energy_paper_j(n, p)); }

// Eigenvalue of the physical radial operator, from the quantization relation:
//   E = V_inf - (hbar^2/2mu) rho^2
// Equal to -energy_paper by the identity
//   4m^2 + (1+2n)(1+omega^2)(1+2n+4|m|) = (1+omega^2)(2N)^2 - 4 m^2 omega^2.
inline double energy_physical_j(int n, const ModelParams& p) {
    const CoulombParameters c = coulomb_parameters(n, p);
    return threshold_energy(p) - kinetic_factor(p.mu) * c.rho * c.rho;
}

inline double energy_physical(int n, const ModelParams& p) {
    return to_ev(energy_physical_j(n, p));
}

// Second-order large-n expansion in the paper sign convention:
//   E ~ -(k^2 hbar^2/2mu)(1+omega^2) + (k^2 hbar^2 omega^2 m^2 / 2mu) / n^2
inline double asymptotic_energy(int n, const ModelParams& p) {
    if (n < 1) throw std::domain_error("asymptotic_energy: n must be at least 1");
    const double md = static_cast<double>(p.m);
    const double u = kinetic_factor(p.mu) * p.k * p.k;
    return to_ev(-u * (1.0 + p.omega * p.omega) +
                 u * p.omega * p.omega * md * md / (static_cast<double>(n) * n));
}

// C_n with integral_0^inf f^2 dr = 1, via Gauss-Laguerre in t = 2 rho r.
inline double normalization_constant(int n, const ModelParams& p) {
    const CoulombParameters c = coulomb_parameters(n, p);
    const int am = std::abs(p.m);
    const int npts = std::max(64, n + am + 2);
    const Quadrature q = gauss_laguerre(npts);
    const double alpha = 2.0 * am;
    double integral = 0.0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        const double t = q.nodes[i];
        const double f1 = confluent_1f1_truncated(n, c.b, t);
        integral += q.weights[i] * std::pow(t, alpha + 1.0) * f1 * f1;
    }
    integral /= std::pow(2.0 * c.rho, alpha + 2.0);
    return 1.0 / std::sqrt(integral);
}

// Normalized regular solution f(r) = C_n r^{1/2+|m|} e^{-rho r} 1F1(-n, b, 2 rho r).
inline double radial_wavefunction(int n, const ModelParams& p, double r) {
    if (r < 0.0) throw std::domain_error("radial_wavefunction: r must be nonnegative");
    const CoulombParameters c = coulomb_parameters(n, p);
    const double cn = normalization_constant(n, p);
    if (r == 0.0) return 0.0;
    return cn * std::pow(r, 0.5 + std::abs(p.m)) * std::exp(-c.rho * r) *
           confluent_1f1_truncated(n, c.b, 2.0 * c.rho * r);
}

struct BoundState {
    int n;
    int m;
    double energy_physical;  // J
    double energy_paper;     // J
    CoulombParameters params;
    double norm_const;
    std::vector<double> grid;     // m
    std::vector<double> profile;  // f(r) samples
};

inline BoundState make_bound_state(int n, const ModelParams& p, const std::vector<double>& grid) {
    BoundState s;
    s.n = n;
    s.m = p.m;
    s.params = coulomb_parameters(n, p);
    s.energy_physical = energy_physical_j(n, p);
    s.energy_paper = energy_paper_j(n, p);
    s.norm_const = normalization_constant(n, p);
    s.grid = grid;
    s.profile.reserve(grid.size());
    for (const double r : grid) {
        if (r == 0.0) {
            s.profile.push_back(0.0);
        } else {
            s.profile.push_back(s.norm_const * std::pow(r, 0.5 + std::abs(p.m)) *
                                std::exp(-s.params.rho * r) *
                                confluent_1f1_truncated(n, s.params.b, 2.0 * s.params.rho * r));
        }
    }
    return s;
}

struct DensityProfile {
    std::vector<double> grid;     // m
    std::vector<double> density;  // 1/m
    double peak_r;                // m
    bool truncated;               // grid shorter than 10/rho
};

inline DensityProfile probability_density(int n, const ModelParams& p,
                                          const std::vector<double>& grid) {
    if (grid.empty()) throw std::domain_error("probability_density: empty grid");
    const BoundState s = make_bound_state(n, p, grid);
    DensityProfile d;
    d.grid = grid;
    d.density.reserve(grid.size());
    double peak = -1.0;
    d.peak_r = grid.front();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = s.profile[i] * s.profile[i];
        d.density.push_back(v);
        if (v > peak) {
            peak = v;
            d.peak_r = grid[i];
        }
    }
    d.truncated = grid.back() < 10.0 / s.params.rho;
    return d;
}

// Interior sign changes of a sampled profile, ignoring samples below
// 1e-12 of the max magnitude.
inline int count_nodes(const std::vector<double>& f) {
    double mx = 0.0;
    for (const double v : f) mx = std::max(mx, std::abs(v));
    if (mx == 0.0) return 0;
    const double cut = 1e-12 * mx;
    int nodes = 0;
    int last = 0;
    for (const double v : f) {
        if (std::abs(v) <= cut) continue;
        const int sgn = v > 0.0 ? 1 : -1;
        if (last != 0 && sgn != last) ++nodes;
        last = sgn;
    }
    return nodes;
}

// omega = 0 continuum solution A J_|m|(qr) + B Y_|m|(qr); q^2 = 2 mu E/hbar^2 - k^2
// must be positive, otherwise the regime is evanescent.
inline double free_radial_solution(int m, double q, double r, double a_coef, double b_coef) {
    if (!(q > 0.0))
        throw std::domain_error("free_radial_solution: evanescent regime, q must be positive");
    if (!(r > 0.0)) throw std::domain_error("free_radial_solution: r must be positive");
    const int am = std::abs(m);
    double out = 0.0;
    if (a_coef != 0.0) out += a_coef * bessel_j(am, q * r);
    if (b_coef != 0.0) out += b_coef * bessel_y(am, q * r);
    return out;
}

}  // namespace hqm
