#pragma once

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "fhmp/config.hpp"
#include "fhmp/oracle.hpp"
#include "fhmp/spectrum.hpp"
#include "fhmp/table.hpp"
#include "fhmp/wavefunction.hpp"

namespace fhmp {

namespace detail {

inline std::vector<double> linspace(double lo, double hi, int samples) {
    std::vector<double> out(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i)
        out[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * i / (samples - 1);
    return out;
}

inline std::string series_label(const std::string& param, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "V[%s=%g]", param.c_str(), value);
    return buf;
}

} // namespace detail

/// Sweep V(t): columns (t, one V column per series value of alpha or q).
/// Default window [0, 6/alpha_min] covers the approach to the asymptote for
/// the slowest series member.
inline Table cmd_potential(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.sweep && *cfg.sweep != SweepVariable::t)
        throw ValidationError("sweep", "potential sweeps over t");
    if (cfg.kind == PotentialKind::box)
        throw ValidationError("kind", "box is a verify-only kind");

    std::vector<GeneralMolecularPotential> variants;
    Table table;
    table.header.push_back("t");
    for (double v : cfg.series) {
        RunConfig one = cfg;
        if (cfg.series_param == "alpha")
            one.alpha = v;
        else
            one.q = v;
        variants.push_back(one.general());
        table.header.push_back(detail::series_label(cfg.series_param, v));
    }

    double min_alpha = cfg.alpha;
    if (cfg.series_param == "alpha")
        min_alpha = *std::min_element(cfg.series.begin(), cfg.series.end());
    const double lo = cfg.sweep_lo.value_or(0.0);
    const double hi = cfg.sweep_hi.value_or(6.0 / min_alpha);
    if (!(lo < hi)) throw ValidationError("sweep_lo", "range lower must be < upper");
    const int samples = cfg.samples.value_or(501);

    for (double t : detail::linspace(lo, hi, samples)) {
        std::vector<std::optional<double>> row;
        row.emplace_back(t);
        for (const auto& p : variants) row.emplace_back(p.value(t));
        table.rows.push_back(std::move(row));
    }
    return table;
}

/// Sweep the closed-form momenta over alpha: columns (alpha, P_0..P_nmax).
/// Parameter sets with no real R produce null momenta for that row and a
/// warning on the diagnostic stream.
inline Table cmd_spectrum(const RunConfig& cfg,
                          std::ostream& diag = std::cerr) {
    cfg.validate();
    if (cfg.sweep && *cfg.sweep != SweepVariable::alpha)
        throw ValidationError("sweep", "spectrum sweeps over alpha");
    if (cfg.kind == PotentialKind::box)
        throw ValidationError("kind", "box is a verify-only kind");

    Table table;
    table.header.push_back("alpha");
    for (int n = 0; n <= cfg.nmax; ++n)
        table.header.push_back("P_" + std::to_string(n));

    const double lo = cfg.sweep_lo.value_or(0.05);
    const double hi = cfg.sweep_hi.value_or(0.5);
    if (!(lo < hi)) throw ValidationError("sweep_lo", "range lower must be < upper");
    const int samples = cfg.samples.value_or(10);

    for (double a : detail::linspace(lo, hi, samples)) {
        RunConfig one = cfg;
        one.alpha = a;
        std::vector<std::optional<double>> row;
        row.emplace_back(a);
        try {
            for (int n = 0; n <= cfg.nmax; ++n) {
                QuantizedState st;
                switch (cfg.kind) {
                case PotentialKind::wei_hua:
                    st = wei_hua_momentum(one.wei_hua(), cfg.constants, n);
                    break;
                case PotentialKind::manning_rosen:
                    st = manning_rosen_momentum(one.manning_rosen(),
                                                cfg.constants, n);
                    break;
                default:
                    st = compute_momentum(one.general(), cfg.constants, n);
                }
                row.emplace_back(st.P);
            }
        } catch (const RNotRealError& e) {
            diag << "warning: alpha = " << a << ": " << e.what()
                 << "; momenta recorded as nulls\n";
            row.resize(1);
            row.resize(static_cast<std::size_t>(cfg.nmax) + 2, std::nullopt);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

/// Normalized eigenstates on a time grid: columns (t, psi_<n>...).
/// Every requested state must be bound; the offending n is named otherwise.
inline Table cmd_wavefunction(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.sweep && *cfg.sweep != SweepVariable::t)
        throw ValidationError("sweep", "wavefunction sweeps over t");
    if (cfg.states.empty())
        throw ValidationError("states", "must list at least one state");
    if (cfg.kind == PotentialKind::box)
        throw ValidationError("kind", "box is a verify-only kind");

    const GeneralMolecularPotential p = cfg.general();
    std::vector<NormalizedWavefunction> waves;
    for (int n : cfg.states) {
        const QuantizedState st = compute_momentum(p, cfg.constants, n);
        if (!st.bound()) throw NonBoundError(n, st.gamma1);
        waves.push_back(normalize(st, p, cfg.constants));
    }

    const SDomain dom = s_domain(p);
    double lo = cfg.sweep_lo.value_or(t_of_s(p, dom.upper * (1.0 - 1e-6)));
    double hi = cfg.sweep_hi.value_or(0.0);
    if (!cfg.sweep_hi) {
        for (const auto& w : waves) hi = std::max(hi, w.t_hi);
    }
    if (!(lo < hi)) throw ValidationError("sweep_lo", "range lower must be < upper");
    const int samples = cfg.samples.value_or(501);

    Table table;
    table.header.push_back("t");
    for (int n : cfg.states)
        table.header.push_back("psi_" + std::to_string(n));
    for (double t : detail::linspace(lo, hi, samples)) {
        std::vector<std::optional<double>> row;
        row.emplace_back(t);
        for (const auto& w : waves) row.emplace_back(w.value_t(t));
        table.rows.push_back(std::move(row));
    }
    return table;
}

/// Closed form vs finite-difference oracle. Box kind self-tests the solver
/// against the analytic particle-in-a-box spectrum.
inline VerificationReport cmd_verify(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.kind == PotentialKind::box)
        return verify_box(cfg.box_length, cfg.constants, cfg.n_check,
                          cfg.npoints);
    VerifyOptions opts;
    opts.npoints = cfg.npoints;
    opts.threshold = cfg.threshold;
    opts.perturb = cfg.perturb_pn;
    return verify_spectrum(cfg.general(), cfg.constants, cfg.n_check, opts);
}

} // namespace fhmp
