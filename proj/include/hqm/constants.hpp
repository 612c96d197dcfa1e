#pragma once

#include <cmath>
#include <stdexcept>

namespace hqm {

// Pinned CODATA-2018 values. All modules do their arithmetic in SI and
// convert to eV only at the I/O boundary.
struct PhysicalConstants {
    double hbar;           // J s
    double electron_mass;  // kg
    double ev;             // J per eV
};

inline constexpr PhysicalConstants constants{1.054571817e-34, 9.1093837015e-31,
                                             1.602176634e-19};

inline constexpr double pi = 3.141592653589793238462643383279502884;

inline double to_ev(double joules) { return joules / constants.ev; }

inline double to_joules(double ev) { return ev * constants.ev; }

// hbar^2 / (2 mu), the prefactor of every effective-potential term.
inline double kinetic_factor(double mu) {
    if (!(mu > 0.0)) throw std::domain_error("kinetic_factor: mass must be positive");
    return constants.hbar * constants.hbar / (2.0 * mu);
}

// hbar^2 k^2 / (2 mu) in eV, the recurring energy unit of the spectrum.
inline double unit_energy(double k, double mu) {
    return to_ev(kinetic_factor(mu) * k * k);
}

}  // namespace hqm
