#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "constants.hpp"

namespace hqm {

// Plain 3x3 value matrix, rows/columns ordered (r, phi, z).
struct Mat3 {
    std::array<double, 9> a{};

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(3 * i + j)]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }

    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }
};

inline Mat3 matmul(const Mat3& x, const Mat3& y) {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int l = 0; l < 3; ++l) s += x(i, l) * y(l, j);
            out(i, j) = s;
        }
    return out;
}

inline double determinant(const Mat3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// g_ij = [[1,0,0],[0,r^2(1+w^2),wr],[0,wr,1]]; det = r^2.
inline Mat3 metric_tensor(double r, double omega) {
    if (!(r > 0.0)) throw std::domain_error("metric_tensor: r must be positive");
    Mat3 g;
    g(0, 0) = 1.0;
    g(1, 1) = r * r * (1.0 + omega * omega);
    g(1, 2) = g(2, 1) = omega * r;
    g(2, 2) = 1.0;
    return g;
}

// g^ij = [[1,0,0],[0,1/r^2,-w/r],[0,-w/r,1+w^2]].
inline Mat3 inverse_metric(double r, double omega) {
    if (!(r > 0.0)) throw std::domain_error("inverse_metric: r must be positive");
    Mat3 g;
    g(0, 0) = 1.0;
    g(1, 1) = 1.0 / (r * r);
    g(1, 2) = g(2, 1) = -omega / r;
    g(2, 2) = 1.0 + omega * omega;
    return g;
}

// Applies the full Laplace-Beltrami operator to e^{im phi} e^{ikz} psi(r) in
// divergence form (sqrt(g) from the metric determinant, angular derivatives
// analytic, g^ij read off inverse_metric) and the separated radial operator
//   psi'' + psi'/r + (-m^2/r^2 + 2 w k m / r - (1+w^2) k^2) psi
// to the same samples, with identical central-difference stencils for the r
// derivatives. Returns the max-norm difference normalized by the max-norm of
// the operator values; separation of variables is exact, so this is pure
// floating-point noise.
inline double radial_reduction_residual(const std::vector<double>& psi, double r_first,
                                        double h, int m, double k, double omega) {
    if (psi.size() < 5) throw std::domain_error("radial_reduction_residual: need at least 5 samples");
    if (!(h > 0.0) || !(r_first > 0.0))
        throw std::domain_error("radial_reduction_residual: grid must satisfy r_first > 0, h > 0");
    if (!std::isfinite(k) || !std::isfinite(omega))
        throw std::domain_error("radial_reduction_residual: parameters must be finite");

    const double md = static_cast<double>(m);
    double max_diff = 0.0;
    double max_val = 0.0;
    for (std::size_t i = 1; i + 1 < psi.size(); ++i) {
        const double r = r_first + static_cast<double>(i) * h;
        const double d2 = (psi[i + 1] - 2.0 * psi[i] + psi[i - 1]) / (h * h);
        const double d1 = (psi[i + 1] - psi[i - 1]) / (2.0 * h);

        const double sg = std::sqrt(determinant(metric_tensor(r, omega)));
        const double sgp = std::sqrt(determinant(metric_tensor(r + 0.5 * h, omega)));
        const double sgm = std::sqrt(determinant(metric_tensor(r - 0.5 * h, omega)));
        const Mat3 gi = inverse_metric(r, omega);
        // (1/sqrt(g)) d/dr( sqrt(g) g^rr dpsi/dr ) on half-step fluxes:
        const double radial_a =
            (sgp * gi(0, 0) * (psi[i + 1] - psi[i]) - sgm * gi(0, 0) * (psi[i] - psi[i - 1])) /
            (sg * h * h);
        // angular block on the phase factor: (im)^2 g^pp + 2(im)(ik) g^pz + (ik)^2 g^zz
        const double coeff_a =
            -md * md * gi(1, 1) - 2.0 * md * k * gi(1, 2) - k * k * gi(2, 2);
        const double lhs = radial_a + coeff_a * psi[i];

        const double coeff_b =
            -md * md / (r * r) + 2.0 * omega * k * md / r - (1.0 + omega * omega) * k * k;
        const double rhs = d2 + d1 / r + coeff_b * psi[i];

        max_diff = std::max(max_diff, std::abs(lhs - rhs));
        max_val = std::max({max_val, std::abs(lhs), std::abs(rhs)});
    }
    if (max_val == 0.0) return max_diff;
    return max_diff / max_val;
}

}  // namespace hqm
