#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "analytic.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "potentials.hpp"

namespace hqm {

// Uniform Dirichlet mesh: interior nodes r_i = i h, i = 1..npts, with the
// wavefunction pinned to zero at r = 0 and r = r_max.
struct RadialGrid {
    double r_max = 0.0;  // m
    int npts = 0;

    double h() const { return r_max / (npts + 1); }
    double r(int i) const { return (i + 1) * h(); }
};

struct TridiagonalOperator {
    std::vector<double> diag;     // J, length npts
    std::vector<double> offdiag;  // J, length npts-1
    double h = 0.0;               // m

    double scale() const {
        double s = 0.0;
        for (const double d : diag) s = std::max(s, std::abs(d));
        return s;
    }
};

// Three-point kinetic stencil plus diagonal potential:
//   diag_i = hbar^2/(mu h^2) + V(r_i),  offdiag = -hbar^2/(2 mu h^2)
template <class V>
inline TridiagonalOperator assemble(V&& potential, const RadialGrid& grid, double mu) {
    if (grid.npts < 1) throw std::domain_error("assemble: grid needs at least one node");
    if (!(grid.r_max > 0.0)) throw std::domain_error("assemble: r_max must be positive");
    if (!(mu > 0.0)) throw std::domain_error("assemble: mass must be positive");
    const double h = grid.h();
    const double t = constants.hbar * constants.hbar / (mu * h * h);
    TridiagonalOperator op;
    op.h = h;
    op.diag.resize(static_cast<std::size_t>(grid.npts));
    op.offdiag.assign(static_cast<std::size_t>(grid.npts - 1), -0.5 * t);
    for (int i = 0; i < grid.npts; ++i) {
        const double r = grid.r(i);
        const double v = potential(r);
        if (!std::isfinite(v)) {
            char msg[128];
            std::snprintf(msg, sizeof msg, "assemble: potential non-finite at node %d (r = %.6e m)",
                          i + 1, r);
            throw std::domain_error(msg);
        }
        op.diag[static_cast<std::size_t>(i)] = t + v;
    }
    return op;
}

// Number of eigenvalues strictly below x, by the Sturm sign count of the
// shifted LDL^T pivots.
inline long sturm_count_below(const TridiagonalOperator& op, double x) {
    const double tiny =
        std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    long count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < op.diag.size(); ++i) {
        const double off2 = i ? op.offdiag[i - 1] * op.offdiag[i - 1] : 0.0;
        d = op.diag[i] - x - off2 / d;
        if (d == 0.0) d = -tiny;
        if (d < 0.0) ++count;
    }
    return count;
}

struct SpectrumSlice {
    std::vector<double> values;  // J, nondecreasing
    long count_below = 0;        // Sturm count at the requested bound
};

// Bisection on the Sturm count inside Gershgorin brackets. Default tolerance
// is 1e-12 * scale with scale = max |diag|; tol = 0 bisects until the bracket
// cannot shrink (ulp-limited), which Richardson estimates rely on.
inline SpectrumSlice eigenvalues_below(const TridiagonalOperator& op, double bound, int max_count,
                                       double tol = -1.0) {
    if (max_count < 1) throw std::domain_error("eigenvalues_below: max_count must be at least 1");
    const std::size_t n = op.diag.size();
    const double scale = op.scale();
    const double tol_eff = tol < 0.0 ? 1e-12 * scale : tol;

    double gmin = std::numeric_limits<double>::infinity();
    double gmax = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(op.offdiag[i - 1]);
        if (i + 1 < n) radius += std::abs(op.offdiag[i]);
        gmin = std::min(gmin, op.diag[i] - radius);
        gmax = std::max(gmax, op.diag[i] + radius);
    }
    const double bump = 1e-12 * (std::abs(gmin) + std::abs(gmax) + scale) +
                        std::numeric_limits<double>::min();
    const double lo0 = gmin - bump;
    const double hi0 = gmax + bump;

    SpectrumSlice out;
    const double bound_eff = std::min(bound, hi0);
    out.count_below = sturm_count_below(op, bound_eff);
    const long nwant = std::min(static_cast<long>(max_count), out.count_below);
    double lo_start = lo0;
    for (long j = 0; j < nwant; ++j) {
        double lo = lo_start;
        double hi = bound_eff;
        while (true) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (sturm_count_below(op, mid) > j) {
                hi = mid;
            } else {
                lo = mid;
            }
            if (tol_eff > 0.0 && hi - lo <= tol_eff) break;
        }
        out.values.push_back(0.5 * (lo + hi));
        lo_start = lo;
    }
    return out;
}

namespace detail {

// Gaussian elimination with partial pivoting for (T - lambda) x = rhs; the
// pivoting fills a second superdiagonal.
inline std::vector<double> solve_shifted(const TridiagonalOperator& op, double lambda,
                                         std::vector<double> rhs, double pivot_floor) {
    const std::size_t n = op.diag.size();
    std::vector<double> bb(n), cc(n, 0.0), ee(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) bb[i] = op.diag[i] - lambda;
    for (std::size_t i = 0; i + 1 < n; ++i) cc[i] = op.offdiag[i];

    for (std::size_t i = 0; i + 1 < n; ++i) {
        double sub = op.offdiag[i];
        if (std::abs(bb[i]) < std::abs(sub)) {
            std::swap(bb[i], sub);
            std::swap(cc[i], bb[i + 1]);
            std::swap(ee[i], cc[i + 1]);
            std::swap(rhs[i], rhs[i + 1]);
        }
        if (bb[i] == 0.0) bb[i] = pivot_floor;
        const double f = sub / bb[i];
        bb[i + 1] -= f * cc[i];
        cc[i + 1] -= f * ee[i];
        rhs[i + 1] -= f * rhs[i];
    }
    if (bb[n - 1] == 0.0) bb[n - 1] = pivot_floor;

    std::vector<double> x(n);
    x[n - 1] = rhs[n - 1] / bb[n - 1];
    if (n >= 2) x[n - 2] = (rhs[n - 2] - cc[n - 2] * x[n - 1]) / bb[n - 2];
    for (std::size_t ip = n; ip >= 3; --ip) {
        const std::size_t i = ip - 3;
        x[i] = (rhs[i] - cc[i] * x[i + 1] - ee[i] * x[i + 2]) / bb[i];
    }
    return x;
}

inline double lcg_uniform(std::uint64_t& state) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
}

}  // namespace detail

// Inverse iteration at a converged eigenvalue. The start vector comes from a
// fixed LCG so results are reproducible; convergence is direction
// stabilization of the iterate. Returned vector satisfies sum v_i^2 h = 1
// with its largest component positive.
inline std::vector<double> eigenvector(const TridiagonalOperator& op, double lambda) {
    const std::size_t n = op.diag.size();
    if (n == 0) throw std::domain_error("eigenvector: empty operator");
    const double scale = op.scale();
    const double pivot_floor =
        std::max(scale * std::numeric_limits<double>::epsilon(), std::numeric_limits<double>::min());
    const double eps = std::numeric_limits<double>::epsilon();
    const double dir_tol = 64.0 * eps * std::sqrt(static_cast<double>(n));

    std::uint64_t rng = 0x9e3779b97f4a7c15ULL;
    std::vector<double> v(n);
    double nv = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = detail::lcg_uniform(rng);
        nv += v[i] * v[i];
    }
    nv = std::sqrt(nv);
    for (double& x : v) x /= nv;

    double residual = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<double> w = detail::solve_shifted(op, lambda, v, pivot_floor);
        double nw = 0.0;
        for (const double x : w) nw += x * x;
        nw = std::sqrt(nw);
        if (!(nw > 0.0) || !std::isfinite(nw)) {
            for (double& x : w) x = detail::lcg_uniform(rng);
            nw = 0.0;
            for (const double x : w) nw += x * x;
            nw = std::sqrt(nw);
        }
        for (double& x : w) x /= nw;
        double dm = 0.0, dp = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            dm += (w[i] - v[i]) * (w[i] - v[i]);
            dp += (w[i] + v[i]) * (w[i] + v[i]);
        }
        const double drift = std::sqrt(std::min(dm, dp));
        v = std::move(w);
        if (drift <= dir_tol) {
            converged = true;
            break;
        }
    }

    double rr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double t = (op.diag[i] - lambda) * v[i];
        if (i > 0) t += op.offdiag[i - 1] * v[i - 1];
        if (i + 1 < n) t += op.offdiag[i] * v[i + 1];
        rr += t * t;
    }
    residual = std::sqrt(rr);
    if (!converged || residual > 1e-8 * scale) {
        char msg[128];
        std::snprintf(msg, sizeof msg,
                      "eigenvector: inverse iteration residual %.3e exceeds 1e-8 * scale %.3e",
                      residual, scale);
        throw convergence_error(msg);
    }

    std::size_t imax = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
    if (v[imax] < 0.0)
        for (double& x : v) x = -x;
    double s = 0.0;
    for (const double x : v) s += x * x * op.h;
    const double inv = 1.0 / std::sqrt(s);
    for (double& x : v) x *= inv;
    return v;
}

struct EigenPair {
    double energy_ev;
    std::vector<double> vector;  // discrete norm sum v_i^2 h = 1
};

namespace detail {

inline void check_resolution(double h, double length_scale, double r_max, const char* model) {
    const double limit = length_scale / 50.0;
    if (h > limit) {
        const long suggested = static_cast<long>(std::ceil(50.0 * r_max / length_scale));
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "solve_bound_states: grid spacing %.3e m does not resolve the %s "
                      "scale %.3e m; use npts >= %ld",
                      h, model, length_scale, suggested);
        throw under_resolved_error(msg, suggested);
    }
}

inline std::vector<EigenPair> eigenpairs_from(const TridiagonalOperator& op,
                                              const SpectrumSlice& slice) {
    std::vector<EigenPair> out;
    out.reserve(slice.values.size());
    for (const double lam : slice.values)
        out.push_back(EigenPair{to_ev(lam), eigenvector(op, lam)});
    return out;
}

}  // namespace detail

// Coulomb model: all states below the threshold, up to `count`. The grid must
// resolve 1/rho of the nodeless state whenever a well exists; for omega = 0
// there is nothing to resolve and the (empty) spectrum below threshold is
// computed directly.
inline std::vector<EigenPair> solve_bound_states(const ModelParams& p, const RadialGrid& grid,
                                                 int count) {
    if (count < 1) throw std::domain_error("solve_bound_states: count must be at least 1");
    if (has_bound_states(p)) {
        const double rho0 = coulomb_parameters(0, p).rho;
        detail::check_resolution(grid.h(), 1.0 / rho0, grid.r_max, "Coulomb");
    }
    const TridiagonalOperator op =
        assemble([&](double r) { return v_eff_coulomb(r, p); }, grid, p.mu);
    const SpectrumSlice slice = eigenvalues_below(op, threshold_energy(p), count);
    return detail::eigenpairs_from(op, slice);
}

// Oscillator model: the lowest `count` states.
inline std::vector<EigenPair> solve_bound_states(const OscillatorParams& p, const RadialGrid& grid,
                                                 int count) {
    if (count < 1) throw std::domain_error("solve_bound_states: count must be at least 1");
    detail::check_resolution(grid.h(), oscillator_length(p), grid.r_max, "oscillator");
    const TridiagonalOperator op =
        assemble([&](double r) { return v_eff_oscillator(r, p); }, grid, p.base.mu);
    const SpectrumSlice slice =
        eigenvalues_below(op, std::numeric_limits<double>::infinity(), count);
    return detail::eigenpairs_from(op, slice);
}

struct RichardsonResult {
    double order;
    bool reliable;  // false when the refinement differences sit in the noise floor
};

namespace detail {

inline RichardsonResult richardson_from(const std::vector<double>& e, double scale) {
    const std::size_t r = e.size() - 1;
    const double d01 = e[r - 2] - e[r - 1];
    const double d12 = e[r - 1] - e[r];
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * scale;
    if (std::abs(d12) <= floor || std::abs(d01) <= floor)
        return RichardsonResult{std::numeric_limits<double>::quiet_NaN(), false};
    if (d01 / d12 <= 0.0)
        throw convergence_error("richardson_order: non-monotone refinement sequence");
    return RichardsonResult{std::log2(d01 / d12), true};
}

}  // namespace detail

// Empirical convergence order of the ground state from grids h, h/2, h/4, ...
// (npts_j = (npts0+1) 2^j - 1 keeps the meshes nested). Uses ulp-limited
// bisection so the default eigenvalue tolerance cannot alias the h^2 signal.
template <class V>
inline RichardsonResult richardson_order(V&& potential, double r_max, int npts0, double mu,
                                         int refinements) {
    if (refinements < 2) throw std::domain_error("richardson_order: refinements must be >= 2");
    std::vector<double> e;
    double scale = 0.0;
    for (int j = 0; j <= refinements; ++j) {
        const RadialGrid g{r_max, ((npts0 + 1) << j) - 1};
        const TridiagonalOperator op = assemble(potential, g, mu);
        scale = op.scale();
        const SpectrumSlice s =
            eigenvalues_below(op, std::numeric_limits<double>::infinity(), 1, 0.0);
        if (s.values.empty())
            throw convergence_error("richardson_order: no eigenvalue found");
        e.push_back(s.values[0]);
    }
    return detail::richardson_from(e, scale);
}

inline RichardsonResult richardson_order(const ModelParams& p, const RadialGrid& grid,
                                         int refinements) {
    if (refinements < 2) throw std::domain_error("richardson_order: refinements must be >= 2");
    if (!has_bound_states(p))
        throw no_bound_state_error("richardson_order: no bound states for these parameters");
    const double rho0 = coulomb_parameters(0, p).rho;
    detail::check_resolution(grid.h(), 1.0 / rho0, grid.r_max, "Coulomb");
    std::vector<double> e;
    double scale = 0.0;
    for (int j = 0; j <= refinements; ++j) {
        const RadialGrid g{grid.r_max, ((grid.npts + 1) << j) - 1};
        const TridiagonalOperator op =
            assemble([&](double r) { return v_eff_coulomb(r, p); }, g, p.mu);
        scale = op.scale();
        const SpectrumSlice s = eigenvalues_below(op, threshold_energy(p), 1, 0.0);
        if (s.values.empty())
            throw convergence_error("richardson_order: no eigenvalue below threshold");
        e.push_back(s.values[0]);
    }
    return detail::richardson_from(e, scale);
}

struct SweepStep {
    double parameter;
    std::vector<EigenPair> states;
};

struct TrackWarning {
    std::size_t step;
    std::size_t track;
    double overlap;
};

struct SweepResult {
    std::vector<double> parameters;
    std::vector<std::vector<double>> energies;           // [step][track], eV
    std::vector<std::vector<std::size_t>> permutations;  // [step][track] -> input index
    std::vector<std::vector<double>> overlaps;           // [step][track]; 1 on the first step
    std::vector<TrackWarning> warnings;                  // overlaps below 0.5
};

namespace detail {

inline double overlap(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("follow_states: eigenvector lengths differ across steps");
    double s = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) return 0.0;
    return std::abs(s) / std::sqrt(na * nb);
}

}  // namespace detail

// Greedy overlap matching across consecutive sweep steps: largest overlaps
// claim their tracks first, ties resolved toward the lower eigenvalue index.
// The number of tracks is the smallest state count over all steps.
inline SweepResult follow_states(const std::vector<SweepStep>& sweep) {
    SweepResult out;
    if (sweep.empty()) return out;
    std::size_t ntracks = sweep[0].states.size();
    for (const SweepStep& st : sweep) ntracks = std::min(ntracks, st.states.size());

    std::vector<const std::vector<double>*> cur(ntracks);
    for (std::size_t j = 0; j < sweep.size(); ++j) {
        const std::vector<EigenPair>& states = sweep[j].states;
        out.parameters.push_back(sweep[j].parameter);
        std::vector<std::size_t> perm(ntracks);
        std::vector<double> ovrow(ntracks, 1.0);
        if (j == 0) {
            for (std::size_t t = 0; t < ntracks; ++t) perm[t] = t;
        } else {
            struct Entry {
                double ov;
                std::size_t cand;
                std::size_t track;
            };
            std::vector<Entry> entries;
            entries.reserve(ntracks * states.size());
            for (std::size_t t = 0; t < ntracks; ++t)
                for (std::size_t c = 0; c < states.size(); ++c)
                    entries.push_back(Entry{detail::overlap(*cur[t], states[c].vector), c, t});
            std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
                if (x.ov != y.ov) return x.ov > y.ov;
                if (x.cand != y.cand) return x.cand < y.cand;
                return x.track < y.track;
            });
            std::vector<char> track_done(ntracks, 0);
            std::vector<char> cand_done(states.size(), 0);
            std::size_t assigned = 0;
            for (const Entry& en : entries) {
                if (assigned == ntracks) break;
                if (track_done[en.track] || cand_done[en.cand]) continue;
                perm[en.track] = en.cand;
                ovrow[en.track] = en.ov;
                track_done[en.track] = 1;
                cand_done[en.cand] = 1;
                ++assigned;
                if (en.ov < 0.5) out.warnings.push_back(TrackWarning{j, en.track, en.ov});
            }
        }
        std::vector<double> row(ntracks);
        for (std::size_t t = 0; t < ntracks; ++t) {
            row[t] = states[perm[t]].energy_ev;
            cur[t] = &states[perm[t]].vector;
        }
        out.energies.push_back(std::move(row));
        out.permutations.push_back(std::move(perm));
        out.overlaps.push_back(std::move(ovrow));
    }
    return out;
}

}  // namespace hqm
