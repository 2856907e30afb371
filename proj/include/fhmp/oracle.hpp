#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "fhmp/constants.hpp"
#include "fhmp/errors.hpp"
#include "fhmp/potentials.hpp"
#include "fhmp/spectrum.hpp"
#include "fhmp/tridiagonal.hpp"

namespace fhmp {

/// Uniform grid with Dirichlet conditions at t_lo and t_hi and npoints
/// interior nodes; h = (t_hi - t_lo)/(npoints + 1). The potential singularity
/// may coincide with a boundary (the natural place for the Dirichlet wall)
/// but must never be interior.
struct Grid {
    double t_lo = 0.0;
    double t_hi = 0.0;
    int npoints = 0;

    double h() const { return (t_hi - t_lo) / (npoints + 1); }
    double node(int i) const { return t_lo + h() * (i + 1); } // i in [0, npoints)

    void validate() const {
        if (!(t_lo < t_hi)) throw ValidationError("t_lo", "must be < t_hi");
        if (npoints < 3) throw ValidationError("npoints", "must be >= 3");
    }
};

/// Central-difference discretization of -hbar^2/(2 m c^2) d^2/dt^2 + V(t):
/// diagonal d_i = hbar^2/(m c^2 h^2) + V(t_i), off-diagonal
/// e = -hbar^2/(2 m c^2 h^2). Eigenvalues estimate c P_n.
template <class V>
inline TridiagonalOperator discretize_potential(V&& v,
                                                const PhysicalConstants& k,
                                                const Grid& g) {
    g.validate();
    k.validate();
    const double kf = k.kinetic_factor(); // hbar^2/(2 m c^2)
    const double h = g.h();
    TridiagonalOperator op;
    op.diag.resize(static_cast<std::size_t>(g.npoints));
    op.off.assign(static_cast<std::size_t>(g.npoints) - 1, -kf / (h * h));
    for (int i = 0; i < g.npoints; ++i) {
        const double vi = v(g.node(i));
        if (!std::isfinite(vi))
            throw NumericalError("potential non-finite at grid node t = " +
                                 std::to_string(g.node(i)));
        op.diag[static_cast<std::size_t>(i)] = 2.0 * kf / (h * h) + vi;
    }
    return op;
}

inline TridiagonalOperator discretize(const GeneralMolecularPotential& p,
                                      const PhysicalConstants& k,
                                      const Grid& g) {
    p.validate();
    g.validate();
    if (auto ts = p.singular_time()) {
        // The singularity may be pinned to a boundary (the natural Dirichlet
        // wall) or kept at least 10 h outside; anything in between puts
        // near-infinite samples on the first nodes.
        const bool on_boundary = (*ts == g.t_lo) || (*ts == g.t_hi);
        const bool inside = *ts > g.t_lo - 10.0 * g.h() &&
                            *ts < g.t_hi + 10.0 * g.h();
        if (!on_boundary && inside)
            throw EvalDomainError(
                "potential singularity t_s = " + std::to_string(*ts) +
                " intrudes on the grid window [" + std::to_string(g.t_lo) +
                ", " + std::to_string(g.t_hi) + "]; pin it to a boundary or "
                "keep a 10 h margin");
    }
    return discretize_potential([&](double t) { return p.value(t); }, k, g);
}

/// Grid-converged eigenvalue estimates: cP values Richardson-extrapolated
/// from the npoints and 2*npoints grids sharing one window (second-order
/// stencil, error model C h^2).
struct OracleResult {
    std::vector<double> eigenvalues;       ///< extrapolated cP estimates
    Grid grid;                             ///< coarse grid (fine = 2x points)
    std::vector<double> richardson_error;  ///< |lambda_f - lambda_c| / 3

    void validate() const {
        for (std::size_t i = 0; i + 1 < eigenvalues.size(); ++i)
            if (!(eigenvalues[i] < eigenvalues[i + 1]))
                throw NumericalError("oracle eigenvalues not increasing");
        for (double e : richardson_error)
            if (!std::isfinite(e))
                throw NumericalError("Richardson error estimate non-finite");
    }
};

template <class V>
inline OracleResult oracle_eigenvalues(V&& v, const PhysicalConstants& k,
                                       const Grid& g, int count) {
    const TridiagonalOperator coarse = discretize_potential(v, k, g);
    Grid g2 = g;
    g2.npoints = 2 * g.npoints;
    const TridiagonalOperator fine = discretize_potential(v, k, g2);
    const std::vector<double> lc = lowest_eigenvalues(coarse, count);
    const std::vector<double> lf = lowest_eigenvalues(fine, count);
    // eliminate the leading C h^2 term from the pair of spacings
    const double hc2 = g.h() * g.h();
    const double hf2 = g2.h() * g2.h();
    OracleResult res;
    res.grid = g;
    res.eigenvalues.resize(static_cast<std::size_t>(count));
    res.richardson_error.resize(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const std::size_t u = static_cast<std::size_t>(i);
        res.eigenvalues[u] = (hc2 * lf[u] - hf2 * lc[u]) / (hc2 - hf2);
        res.richardson_error[u] = std::abs(res.eigenvalues[u] - lf[u]);
    }
    res.validate();
    return res;
}

/// Default verification window. The left boundary pins the Dirichlet wall
/// to the singular time (q > 0) or backs 20/alpha off the equilibrium
/// (q < 0); the right boundary covers the slowest bound-state tail
/// e^{-gamma1 alpha t} down to ~1e-10 of its scale, falling back to
/// 60/alpha when nothing is bound.
inline Grid default_verify_grid(const GeneralMolecularPotential& p,
                                const MomentumSpectrum& closed, int npoints) {
    Grid g;
    const auto ts = p.singular_time();
    g.t_lo = ts ? *ts : p.t_e - 20.0 / p.alpha;
    const double gmin = closed.min_bound_gamma1();
    const double span = (gmin > 0.0) ? std::max(20.0, 11.5 / gmin) : 60.0;
    g.t_hi = p.t_e + span / p.alpha;
    g.npoints = npoints;
    g.validate();
    return g;
}

struct VerifyOptions {
    int npoints = 4000;      ///< coarse grid; the refined grid doubles it
    double threshold = 1e-3; ///< relative deviation gate
    double perturb = 0.0;    ///< test hook: offset added to closed-form P_n
};

struct VerificationRow {
    int n = 0;
    double closed_cP = 0.0;
    double oracle_cP = std::numeric_limits<double>::quiet_NaN();
    double rel_dev = std::numeric_limits<double>::infinity();
    double richardson_error = std::numeric_limits<double>::quiet_NaN();
    bool matched = false; ///< an oracle eigenvalue below the asymptote existed
};

struct VerificationReport {
    std::vector<VerificationRow> rows;
    Grid grid;
    double asymptote = 0.0;
    int oracle_bound_count = 0;

    bool passed(double threshold) const {
        if (rows.empty()) return false;
        for (const auto& r : rows)
            if (!r.matched || !(r.rel_dev <= threshold)) return false;
        return true;
    }

    double max_rel_dev() const {
        double m = 0.0;
        for (const auto& r : rows)
            m = std::max(m, r.rel_dev);
        return m;
    }

    /// One line per n: n, closed-form cP, oracle cP, relative deviation,
    /// Richardson error estimate.
    std::string to_text() const {
        std::string out;
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "# grid t_lo=%.17g t_hi=%.17g npoints=%d (refined %d)\n",
                      grid.t_lo, grid.t_hi, grid.npoints, 2 * grid.npoints);
        out += buf;
        std::snprintf(buf, sizeof buf,
                      "# asymptote=%.17g oracle_bound_count=%d\n", asymptote,
                      oracle_bound_count);
        out += buf;
        out += "# n closed_cP oracle_cP rel_dev richardson_err\n";
        for (const auto& r : rows) {
            if (r.matched)
                std::snprintf(buf, sizeof buf, "%d %.17g %.17g %.6e %.6e\n",
                              r.n, r.closed_cP, r.oracle_cP, r.rel_dev,
                              r.richardson_error);
            else
                std::snprintf(buf, sizeof buf,
                              "%d %.17g unmatched inf nan\n", r.n, r.closed_cP);
            out += buf;
        }
        return out;
    }
};

/// Compare the closed-form momenta for n = 0..n_check-1 against the
/// grid-converged finite-difference eigenvalues. Oracle eigenvalues at or
/// above the asymptotic potential value are box artifacts, not bound-state
/// estimates, and are never paired. Throws ConvergenceError when a paired
/// Richardson estimate itself exceeds the threshold (the oracle could not
/// certify at the requested tolerance).
inline VerificationReport verify_spectrum(const GeneralMolecularPotential& p,
                                          const PhysicalConstants& k,
                                          int n_check,
                                          const VerifyOptions& opts = {}) {
    if (n_check < 1) throw ValidationError("n_check", "must be >= 1");
    const MomentumSpectrum closed = compute_spectrum(p, k, n_check - 1);
    const Grid g = default_verify_grid(p, closed, opts.npoints);
    const OracleResult oracle = oracle_eigenvalues(
        [&](double t) { return p.value(t); }, k, g, n_check + 3);

    VerificationReport rep;
    rep.grid = g;
    rep.asymptote = p.asymptote();

    std::vector<std::size_t> trusted;
    for (std::size_t i = 0; i < oracle.eigenvalues.size(); ++i)
        if (oracle.eigenvalues[i] < rep.asymptote) trusted.push_back(i);
    rep.oracle_bound_count = static_cast<int>(trusted.size());

    for (int n = 0; n < n_check; ++n) {
        VerificationRow row;
        row.n = n;
        row.closed_cP =
            k.c * (closed.states[static_cast<std::size_t>(n)].P + opts.perturb);
        if (static_cast<std::size_t>(n) < trusted.size()) {
            const std::size_t i = trusted[static_cast<std::size_t>(n)];
            row.oracle_cP = oracle.eigenvalues[i];
            row.rel_dev = std::abs(row.closed_cP - row.oracle_cP) /
                          std::abs(row.oracle_cP);
            row.richardson_error = oracle.richardson_error[i];
            row.matched = true;
            if (oracle.richardson_error[i] >
                opts.threshold * std::abs(row.oracle_cP))
                throw ConvergenceError(
                    "Richardson estimate exceeds the requested tolerance for "
                    "n = " + std::to_string(n) + "; refine npoints");
        }
        rep.rows.push_back(row);
    }
    return rep;
}

/// Analytic box reference: V = 0 on [0, L], eigenvalues
/// (hbar^2/2 m c^2) (pi n / L)^2. Used as the oracle self-test.
inline VerificationReport verify_box(double L, const PhysicalConstants& k,
                                     int n_check, int npoints) {
    if (!(L > 0.0)) throw ValidationError("box_length", "must be > 0");
    Grid g{0.0, L, npoints};
    const OracleResult oracle =
        oracle_eigenvalues([](double) { return 0.0; }, k, g, n_check);
    VerificationReport rep;
    rep.grid = g;
    rep.asymptote = std::numeric_limits<double>::infinity();
    rep.oracle_bound_count = n_check;
    for (int n = 1; n <= n_check; ++n) {
        VerificationRow row;
        row.n = n - 1;
        const double pn = std::numbers::pi * n / L;
        row.closed_cP = k.kinetic_factor() * pn * pn;
        row.oracle_cP = oracle.eigenvalues[static_cast<std::size_t>(n - 1)];
        row.rel_dev =
            std::abs(row.closed_cP - row.oracle_cP) / std::abs(row.oracle_cP);
        row.richardson_error =
            oracle.richardson_error[static_cast<std::size_t>(n - 1)];
        row.matched = true;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace fhmp
