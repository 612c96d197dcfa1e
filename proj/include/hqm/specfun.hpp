#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "constants.hpp"

namespace hqm {

// 1F1(-n, b, x) truncated to its polynomial form, forward recurrence on the
// series coefficients. Only the a = -n branch is ever needed.
inline double confluent_1f1_truncated(int n, double b, double x) {
    if (n < 0) throw std::domain_error("confluent_1f1_truncated: n must be nonnegative");
    if (!(b > 0.0)) throw std::domain_error("confluent_1f1_truncated: b must be positive");
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < n; ++j) {
        term *= (static_cast<double>(j) - static_cast<double>(n)) * x / ((b + j) * (j + 1.0));
        sum += term;
    }
    return sum;
}

// Generalized Laguerre polynomial L_n^(alpha)(x), three-term recurrence.
inline double laguerre(int n, double alpha, double x) {
    if (n < 0) throw std::domain_error("laguerre: n must be nonnegative");
    if (!(alpha > -1.0)) throw std::domain_error("laguerre: alpha must exceed -1");
    if (n == 0) return 1.0;
    double lm = 1.0;
    double lc = 1.0 + alpha - x;
    for (int j = 1; j < n; ++j) {
        const double lp = ((2.0 * j + 1.0 + alpha - x) * lc - (j + alpha) * lm) / (j + 1.0);
        lm = lc;
        lc = lp;
    }
    return lc;
}

namespace detail {

// Ascending power series; used below x = 4 where its terms stay small.
inline double bessel_j_series(int nu, double x) {
    if (x == 0.0) return nu == 0 ? 1.0 : 0.0;
    const double q = 0.5 * x;
    double term = std::exp(nu * std::log(q) - std::lgamma(nu + 1.0));
    double sum = term;
    const double mq2 = -q * q;
    for (int j = 1; j <= 400; ++j) {
        term *= mq2 / (j * (static_cast<double>(nu) + j));
        sum += term;
        if (std::abs(term) <= 1e-17 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

// Hankel asymptotic moduli P, Q summed to the smallest term; the expansion is
// divergent, so the loop stops as soon as the terms stop shrinking.
inline void bessel_pq(int nu, double x, double& p, double& q) {
    const double mu = 4.0 * nu * static_cast<double>(nu);
    const double ix2 = 1.0 / (64.0 * x * x);
    double tp = 1.0;
    double tq = (mu - 1.0) / (8.0 * x);
    p = tp;
    q = tq;
    double prev = std::abs(tp) + std::abs(tq);
    for (int k = 1; k <= 40; ++k) {
        const double f3 = 4.0 * k - 3.0, f1 = 4.0 * k - 1.0, g1 = 4.0 * k + 1.0;
        tp *= -(mu - f3 * f3) * (mu - f1 * f1) * ix2 / ((2.0 * k - 1.0) * (2.0 * k));
        tq *= -(mu - f1 * f1) * (mu - g1 * g1) * ix2 / ((2.0 * k) * (2.0 * k + 1.0));
        const double cur = std::abs(tp) + std::abs(tq);
        if (cur >= prev) break;
        p += tp;
        q += tq;
        if (cur < 1e-17) break;
        prev = cur;
    }
}

inline double bessel_j_asym(int nu, double x) {
    double p, q;
    bessel_pq(nu, x, p, q);
    const double chi = x - (0.5 * nu + 0.25) * pi;
    return std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

inline double bessel_y_asym(int nu, double x) {
    double p, q;
    bessel_pq(nu, x, p, q);
    const double chi = x - (0.5 * nu + 0.25) * pi;
    return std::sqrt(2.0 / (pi * x)) * (p * std::sin(chi) + q * std::cos(chi));
}

// Y0, Y1 from the logarithmic series (x < 14 regime).
inline void bessel_y01_series(double x, double& y0, double& y1) {
    const double eg = 0.57721566490153286060651209008240243;
    const double j0 = bessel_j_series(0, x);
    const double j1 = bessel_j_series(1, x);
    const double lx = std::log(0.5 * x);
    const double q = 0.25 * x * x;

    double hk = 0.0, t = 1.0, s0 = 0.0;
    for (int k = 1; k <= 400; ++k) {
        t *= q / (static_cast<double>(k) * k);
        hk += 1.0 / k;
        const double add = ((k & 1) ? 1.0 : -1.0) * t * hk;
        s0 += add;
        if (std::abs(add) <= 1e-17 * (std::abs(s0) + 1.0)) break;
    }
    y0 = (2.0 / pi) * ((lx + eg) * j0 + s0);

    double ha = 0.0, hb = 1.0, u = 1.0;
    double s1 = ha + hb - 2.0 * eg;
    for (int k = 1; k <= 400; ++k) {
        u *= -q / (static_cast<double>(k) * (k + 1.0));
        ha += 1.0 / k;
        hb += 1.0 / (k + 1.0);
        const double add = u * (ha + hb - 2.0 * eg);
        s1 += add;
        if (std::abs(add) <= 1e-17 * (std::abs(s1) + 1.0)) break;
    }
    y1 = (2.0 / pi) * lx * j1 - 2.0 / (pi * x) - (x / (2.0 * pi)) * s1;
}

// Miller downward recurrence for J_nu when nu > x, normalized through
// J_0 + 2 sum_k J_2k = 1.
inline double bessel_j_miller(int nu, double x) {
    int top = static_cast<int>(std::max(static_cast<double>(nu), x)) + 42;
    if (top & 1) ++top;
    double jp = 0.0;
    double jc = 1e-30;
    double ans = 0.0;
    double sum = jc;
    for (int j = top; j >= 1; --j) {
        const double jm = (2.0 * j / x) * jc - jp;
        jp = jc;
        jc = jm;
        if (std::abs(jc) > 1e250) {
            jc *= 1e-250;
            jp *= 1e-250;
            sum *= 1e-250;
            ans *= 1e-250;
        }
        if (((j - 1) & 1) == 0 && j - 1 > 0) sum += jc;
        if (j - 1 == nu) ans = jc;
    }
    return ans / (2.0 * sum + jc);
}

}  // namespace detail

inline double bessel_j(int nu, double x) {
    if (nu < 0) throw std::domain_error("bessel_j: order must be nonnegative");
    if (x < 0.0) throw std::domain_error("bessel_j: argument must be nonnegative");
    // The ascending series alternates; past x ~ 4 its largest term outgrows the
    // result and cancellation eats digits, so switch to Miller recurrence there.
    if (x < 4.0) return detail::bessel_j_series(nu, x);
    if (x < 14.0) return detail::bessel_j_miller(nu, x);
    if (nu == 0 || nu == 1) return detail::bessel_j_asym(nu, x);
    if (static_cast<double>(nu) <= x) {
        double jm = detail::bessel_j_asym(0, x);
        double jc = detail::bessel_j_asym(1, x);
        for (int k = 1; k < nu; ++k) {
            const double jn = (2.0 * k / x) * jc - jm;
            jm = jc;
            jc = jn;
        }
        return jc;
    }
    return detail::bessel_j_miller(nu, x);
}

inline double bessel_y(int nu, double x) {
    if (nu < 0) throw std::domain_error("bessel_y: order must be nonnegative");
    if (!(x > 0.0)) throw std::domain_error("bessel_y: singular at x <= 0");
    double y0, y1;
    if (x < 14.0) {
        detail::bessel_y01_series(x, y0, y1);
    } else {
        y0 = detail::bessel_y_asym(0, x);
        y1 = detail::bessel_y_asym(1, x);
    }
    if (nu == 0) return y0;
    if (nu == 1) return y1;
    double ym = y0;
    double yc = y1;
    for (int k = 1; k < nu; ++k) {
        const double yn = (2.0 * k / x) * yc - ym;
        ym = yc;
        yc = yn;
    }
    return yc;
}

struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};

namespace detail {

// L_n(x) and L_{n-1}(x) at alpha = 0, for the quadrature Newton steps.
inline std::pair<double, double> laguerre_pair(int n, double x) {
    double p1 = 1.0;
    double p2 = 0.0;
    for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0 - x) * p2 - j * p3) / (j + 1.0);
    }
    return {p1, p2};
}

}  // namespace detail

// Gauss-Laguerre rule for integral_0^inf e^{-t} f(t) dt, exact for
// polynomials of degree <= 2 npts - 1.
inline Quadrature gauss_laguerre(int npts) {
    if (npts < 1 || npts > 200) throw std::domain_error("gauss_laguerre: npts must be in [1, 200]");
    Quadrature q;
    q.nodes.resize(static_cast<std::size_t>(npts));
    q.weights.resize(static_cast<std::size_t>(npts));
    double z = 0.0;
    for (int i = 0; i < npts; ++i) {
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * npts);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * npts);
        } else {
            const double ai = i - 1.0;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - q.nodes[static_cast<std::size_t>(i - 2)]);
        }
        for (int it = 0; it < 100; ++it) {
            const auto [p1, p2] = detail::laguerre_pair(npts, z);
            const double pp = npts * (p1 - p2) / z;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-14 * std::max(1.0, std::abs(z))) break;
        }
        q.nodes[static_cast<std::size_t>(i)] = z;
        const auto [pn1, unused] = detail::laguerre_pair(npts + 1, z);
        (void)unused;
        const double d = (npts + 1.0) * pn1;
        q.weights[static_cast<std::size_t>(i)] = z / (d * d);
    }
    return q;
}

}  // namespace hqm
