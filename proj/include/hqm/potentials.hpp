#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "constants.hpp"
#include "errors.hpp"

namespace hqm {

struct ModelParams {
    double omega = 0.0;                      // torsion, dimensionless
    double k = 0.0;                          // longitudinal wavenumber, 1/m
    int m = 0;                               // azimuthal integer
    double mu = constants.electron_mass;     // effective mass, kg
};

// Bound states exist only for attractive coupling, omega*k*m > 0 with |m| >= 1.
inline bool has_bound_states(const ModelParams& p) {
    return p.omega * p.k * p.m > 0.0 && std::abs(p.m) >= 1;
}

// V_inf = hbar^2 k^2 (1+omega^2) / (2 mu), the r -> infinity limit of the
// effective potential in the physical sign convention.
inline double threshold_energy(const ModelParams& p) {
    return kinetic_factor(p.mu) * p.k * p.k * (1.0 + p.omega * p.omega);
}

// Physical convention throughout:
//   V(r) = (hbar^2/2mu) [ (m^2 - 1/4)/r^2 - 2 omega k m / r + (1+omega^2) k^2 ]
// Its r -> infinity limit is +threshold_energy, matching the prose statement
// that the potential tends to a positive constant; the published display of
// V_inf carries the opposite sign and is exposed only through the
// paper-convention spectrum outputs.
inline double v_eff_coulomb(double r, const ModelParams& p) {
    if (!(r > 0.0)) throw std::domain_error("v_eff_coulomb: r must be positive");
    const double md = static_cast<double>(p.m);
    return kinetic_factor(p.mu) *
           ((md * md - 0.25) / (r * r) - 2.0 * p.omega * p.k * md / r +
            (1.0 + p.omega * p.omega) * p.k * p.k);
}

struct WellMinimum {
    double r_star;  // m
    double v_star;  // J
};

inline WellMinimum potential_minimum(const ModelParams& p) {
    const double md = static_cast<double>(p.m);
    if (std::abs(p.m) < 1) throw no_well_error("potential_minimum: no well for m = 0");
    if (!(p.omega * p.k * md > 0.0))
        throw no_well_error("potential_minimum: no well unless omega*k*m > 0");
    const double c = p.omega * p.k * md;
    const double m2 = md * md - 0.25;
    WellMinimum w;
    w.r_star = m2 / c;
    w.v_star = kinetic_factor(p.mu) * ((1.0 + p.omega * p.omega) * p.k * p.k - c * c / m2);
    return w;
}

struct OscillatorParams {
    ModelParams base;
    double omega0 = 0.0;                  // rad/s
    double Omega = 0.0;                   // |mu omega0 / hbar|, 1/m^2
    double xi = 0.0;                      // m omega k, 1/m
    std::optional<double> iota;           // sqrt(m^2 - 1/4), real only for |m| >= 1
    std::optional<double> Lambda;         // sqrt(2 mu E / hbar^2 - (1+omega^2) k^2)
};

// Parameter bundle sufficient for assembling the oscillator potential; m = 0
// is allowed here (iota is simply left unset).
inline OscillatorParams make_oscillator(const ModelParams& p, double omega0) {
    if (!(p.mu > 0.0)) throw std::domain_error("make_oscillator: mass must be positive");
    OscillatorParams op;
    op.base = p;
    op.omega0 = omega0;
    op.Omega = std::abs(p.mu * omega0 / constants.hbar);
    op.xi = static_cast<double>(p.m) * p.omega * p.k;
    const double md = static_cast<double>(p.m);
    if (std::abs(p.m) >= 1) op.iota = std::sqrt(md * md - 0.25);
    return op;
}

// Full parameter set at a given energy; iota must be real.
inline OscillatorParams oscillator_parameters(const ModelParams& p, double omega0, double energy) {
    if (std::abs(p.m) < 1)
        throw std::domain_error("oscillator_parameters: iota undefined for m = 0");
    OscillatorParams op = make_oscillator(p, omega0);
    const double lam2 = 2.0 * p.mu * energy / (constants.hbar * constants.hbar) -
                        (1.0 + p.omega * p.omega) * p.k * p.k;
    if (lam2 >= 0.0) op.Lambda = std::sqrt(lam2);
    return op;
}

// Coulomb potential plus the harmonic term; written as the sum so that the
// difference of the two models is exactly the quadratic piece.
inline double v_eff_oscillator(double r, const OscillatorParams& p) {
    return v_eff_coulomb(r, p.base) + kinetic_factor(p.base.mu) * p.Omega * p.Omega * r * r;
}

// sqrt(hbar / (mu omega0)) = 1/sqrt(Omega), the natural radial scale.
inline double oscillator_length(const OscillatorParams& p) {
    if (!(p.Omega > 0.0)) throw std::domain_error("oscillator_length: Omega must be positive");
    return 1.0 / std::sqrt(p.Omega);
}

}  // namespace hqm
