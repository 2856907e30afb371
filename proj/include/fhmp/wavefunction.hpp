#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "fhmp/constants.hpp"
#include "fhmp/errors.hpp"
#include "fhmp/jacobi.hpp"
#include "fhmp/potentials.hpp"
#include "fhmp/quadrature.hpp"
#include "fhmp/spectrum.hpp"

namespace fhmp {

/// Domain of the substitution variable s = q e^{-alpha (t - t_e)}.
/// Defined for q > 0 only; s decreases from s_max (at t = 0) to 0 (t -> inf).
/// The boundary zeros of the eigenstates sit at s = 0 and s = 1; evaluation
/// and normalization run over s in (0, upper), upper = min(1, s_max).
struct SDomain {
    double s_max = 0.0;
    double upper = 0.0;
};

inline SDomain s_domain(const GeneralMolecularPotential& p) {
    p.validate();
    if (p.q <= 0.0)
        throw EvalDomainError("s-coordinate requires q > 0 (got q = " +
                              std::to_string(p.q) + ")");
    SDomain d;
    d.s_max = p.q * std::exp(p.alpha * p.t_e);
    d.upper = std::min(1.0, d.s_max);
    return d;
}

inline double s_of_t(const GeneralMolecularPotential& p, double t) {
    return p.q * std::exp(-p.alpha * (t - p.t_e));
}

inline double t_of_s(const GeneralMolecularPotential& p, double s) {
    return p.t_e + std::log(p.q / s) / p.alpha;
}

namespace detail {
inline void require_bound(const QuantizedState& st) {
    if (!st.bound()) throw NonBoundError(st.n, st.gamma1);
}
inline void require_in_domain(double s, const SDomain& d) {
    if (!(s > 0.0) || !(s < d.upper))
        throw EvalDomainError("s = " + std::to_string(s) +
                              " outside (0, " + std::to_string(d.upper) + ")");
}
} // namespace detail

/// Unnormalized eigenstate value
///   psi_n(s) = s^{gamma1} (1-s)^{1/R} P_n^{(2 gamma1, 2/R - 1)}(1 - 2s).
inline double eval_unnormalized(const QuantizedState& st, double s,
                                const SDomain& dom) {
    detail::require_bound(st);
    detail::require_in_domain(s, dom);
    return std::pow(s, st.gamma1) * std::pow(1.0 - s, st.inv_R) *
           jacobi(st.n, st.jacobi_a(), st.jacobi_b(), 1.0 - 2.0 * s);
}

/// Unnormalized eigenstate in the time coordinate.
inline double eval_t(const QuantizedState& st,
                     const GeneralMolecularPotential& p, double t) {
    const SDomain dom = s_domain(p);
    return eval_unnormalized(st, s_of_t(p, t), dom);
}

/// A bound state with its normalization constant, satisfying
/// integral of |B_n psi_n(t)|^2 dt = 1 over t in (t(s=upper), infinity).
/// [t_lo, t_hi] is the reporting window: outside it |psi| < 1e-12 of peak.
struct NormalizedWavefunction {
    QuantizedState state;
    GeneralMolecularPotential potential;
    double B_n = 0.0;
    double t_lo = 0.0;
    double t_hi = 0.0;

    double value_s(double s) const {
        return B_n * eval_unnormalized(state, s, s_domain(potential));
    }
    double value_t(double t) const {
        return B_n * eval_t(state, potential, t);
    }
};

namespace detail {

/// Norm integral in s: integral over (0, upper) of psi(s)^2 / (alpha s) ds,
/// from the change of variables dt = -ds/(alpha s). Composite Gauss-Legendre
/// on geometric panels toward s = 0 (the integrand behaves like
/// s^{2 gamma1 - 1} there), each panel refined by doubling from 128 points
/// until the total moves by < 1e-10 relative.
template <class F>
inline double norm_integral_s(F&& sq_over_s, double upper) {
    const double splits[] = {0.0, 1e-6, 1e-3, 0.1, 1.0};
    double prev = 0.0;
    for (int npts = 128; npts <= (1 << 12); npts *= 2) {
        const QuadratureRule rule = gauss_legendre(npts);
        double total = 0.0;
        for (int pnl = 0; pnl < 4; ++pnl)
            total += rule.integrate(sq_over_s, splits[pnl] * upper,
                                    splits[pnl + 1] * upper);
        if (npts > 128 &&
            std::abs(total - prev) <= 1e-10 * std::abs(total))
            return total;
        prev = total;
    }
    throw ConvergenceError("norm quadrature did not stabilize to 1e-10");
}

} // namespace detail

/// Fix B_n so the state integrates to unit probability over
/// t in (t(s=upper), infinity), i.e. s in (0, upper).
inline NormalizedWavefunction normalize(const QuantizedState& st,
                                        const GeneralMolecularPotential& p,
                                        const PhysicalConstants& k) {
    k.validate();
    detail::require_bound(st);
    const SDomain dom = s_domain(p);
    const double g = st.gamma1;
    const double r = st.inv_R;
    const auto raw = [&](double s) {
        return std::pow(s, g) * std::pow(1.0 - s, r) *
               jacobi(st.n, 2.0 * g, 2.0 * r - 1.0, 1.0 - 2.0 * s);
    };

    // rescale by the peak before squaring: strongly bound states otherwise
    // underflow the norm integrand (s^gamma1 with gamma1 in the hundreds)
    double peak = 0.0;
    for (int j = 1; j <= 2048; ++j) {
        const double s = dom.upper * j / 2049.0;
        peak = std::max(peak, std::abs(raw(s)));
    }
    if (!std::isfinite(peak) || !(peak > 0.0))
        throw NumericalError("eigenstate scan came out non-finite or zero");

    const double norm2 = detail::norm_integral_s(
        [&](double s) {
            const double v = raw(s) / peak;
            return v * v / (p.alpha * s);
        },
        dom.upper);
    if (!std::isfinite(norm2) || !(norm2 > 0.0))
        throw NumericalError("norm integral came out non-finite or "
                             "non-positive");
    NormalizedWavefunction w;
    w.state = st;
    w.potential = p;
    w.B_n = 1.0 / (peak * std::sqrt(norm2));

    // reporting window: s->0 cutoff from the analytic leading term
    // s^gamma1 * P_n(1)
    const double lead = std::abs(jacobi(st.n, 2.0 * g, 2.0 * r - 1.0, 1.0));
    const double s_cut =
        std::pow(1e-12 * peak / std::max(lead, 1e-300), 1.0 / g);
    w.t_lo = t_of_s(p, dom.upper * (1.0 - 1e-9));
    w.t_hi = t_of_s(p, std::min(s_cut, 0.5 * dom.upper));
    return w;
}

} // namespace fhmp
