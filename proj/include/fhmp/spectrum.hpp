#pragma once

#include <cmath>
#include <vector>

#include "fhmp/constants.hpp"
#include "fhmp/errors.hpp"
#include "fhmp/potentials.hpp"

namespace fhmp {

/// The dimensionless 1/R entering the quantization rule,
///   1/R = 1/2 + sqrt( ks [q~ (C - D/q)^2 + A - B/q] + 1/4 ),
/// with ks = 2 m c^2/(hbar alpha)^2. Real parameters require the radicand
/// to be non-negative; inv_R > 1/2 always, and >= 1 when the radicand >= 1/4.
struct InverseR {
    double value = 0.0;
};

/// Coefficients of the transformed s-space equation, kept as functions of
/// the momentum eigenvalue for diagnostics. They cancel out of the final
/// momentum formula and are not consumed by it.
struct IntermediateCoefficients {
    double kinetic_scale = 0.0; ///< 2 m c^2 / (hbar alpha)^2
    double asymptote = 0.0;     ///< A + q~ C^2
    double d2_over_q2 = 0.0;    ///< q~ D^2 / q^2
    double linear = 0.0;        ///< B/q + 2 q~ C D / q
    double c = 1.0;             ///< speed constant, converts P to energy

    double gamma1_sq(double P) const {
        return kinetic_scale * (asymptote - c * P);
    }
    double gamma2(double P) const {
        return -kinetic_scale * (d2_over_q2 - c * P);
    }
    double gamma3(double P) const {
        return -kinetic_scale * (linear - 2.0 * c * P);
    }
};

inline IntermediateCoefficients
coefficients(const GeneralMolecularPotential& p, const PhysicalConstants& k) {
    p.validate();
    k.validate();
    IntermediateCoefficients ic;
    ic.kinetic_scale = k.kinetic_scale(p.alpha);
    ic.asymptote = p.asymptote();
    ic.d2_over_q2 = p.q_tilde * p.D * p.D / (p.q * p.q);
    ic.linear = p.B / p.q + 2.0 * p.q_tilde * p.C * p.D / p.q;
    ic.c = k.c;
    return ic;
}

inline InverseR compute_inv_R(const GeneralMolecularPotential& p,
                              const PhysicalConstants& k) {
    p.validate();
    k.validate();
    const double ks = k.kinetic_scale(p.alpha);
    const double cd = p.C - p.D / p.q;
    const double radicand =
        ks * (p.q_tilde * cd * cd + p.A - p.B / p.q) + 0.25;
    if (radicand < 0.0) throw RNotRealError(radicand);
    return InverseR{0.5 + std::sqrt(radicand)};
}

/// One quantized momentum state.
///
/// gamma1 is the decay exponent of the s->0 wavefunction factor s^gamma1:
/// the unique value for which the degree-n polynomial factor solves the
/// transformed equation,
///
///   gamma1 = [K - 1/R - n(n + 2/R)] / (2 (n + 1/R)),
///   K = ks (B/q + 2 q~ C D/q - 2A - 2 q~ C^2).
///
/// The momentum depends on gamma1 only through its square,
///   c P_n = A + q~ C^2 - gamma1^2 / ks,
/// so states with gamma1 <= 0 still carry a well-defined formula value; they
/// are flagged non-bound (the s^gamma1 factor is not normalizable) rather
/// than rejected, so sweeps can render full series.
struct QuantizedState {
    int n = 0;
    double P = 0.0;      ///< quantized momentum P_n
    double gamma1 = 0.0; ///< s->0 decay exponent; bound iff > 0
    double inv_R = 0.0;

    bool bound() const { return gamma1 > 0.0; }
    double jacobi_a() const { return 2.0 * gamma1; }
    double jacobi_b() const { return 2.0 * inv_R - 1.0; }
};

/// Residual of the self-consistency identity
/// gamma1^2 = ks (A + q~ C^2 - c P_n), relative to the operand scale
/// (the subtraction inside the right side is where rounding enters).
inline double eq_closure_residual(const QuantizedState& st,
                                  const GeneralMolecularPotential& p,
                                  const PhysicalConstants& k) {
    const double ks = k.kinetic_scale(p.alpha);
    const double lhs = st.gamma1 * st.gamma1;
    const double rhs = ks * (p.asymptote() - k.c * st.P);
    const double scale =
        std::max({std::abs(lhs), std::abs(rhs),
                  ks * (std::abs(p.asymptote()) + std::abs(k.c * st.P)),
                  1e-300});
    return std::abs(lhs - rhs) / scale;
}

namespace detail {
inline QuantizedState make_state(int n, double inv_R, double K, double ks,
                                 double asymptote, double c) {
    if (n < 0) throw ValidationError("n", "quantum number must be >= 0");
    const double r = inv_R;
    // quotient formed before squaring so large n cannot overflow
    const double g = (K - r - n * (n + 2.0 * r)) / (2.0 * (n + r));
    QuantizedState st;
    st.n = n;
    st.gamma1 = g;
    st.inv_R = r;
    st.P = (asymptote - g * g / ks) / c;
    if (!std::isfinite(st.P))
        throw NumericalError("momentum came out non-finite for n = " +
                             std::to_string(n));
    return st;
}
} // namespace detail

/// Momentum eigenvalue for quantum number n of the general potential.
inline QuantizedState compute_momentum(const GeneralMolecularPotential& p,
                                       const PhysicalConstants& k, int n) {
    const InverseR r = compute_inv_R(p, k);
    const double ks = k.kinetic_scale(p.alpha);
    const double K =
        ks * (p.B / p.q + 2.0 * p.q_tilde * p.C * p.D / p.q - 2.0 * p.A -
              2.0 * p.q_tilde * p.C * p.C);
    QuantizedState st =
        detail::make_state(n, r.value, K, ks, p.asymptote(), k.c);
    if (eq_closure_residual(st, p, k) > 1e-10)
        throw NumericalError("gamma1^2 self-consistency violated for n = " +
                             std::to_string(n));
    return st;
}

/// Wei-Hua route: same algebra with A = B = 0, C = D = 1 substituted by hand,
///   1/R = 1/2 + sqrt( ks q~ (1 - 1/q)^2 + 1/4 ),  K = 2 ks q~ (1/q - 1).
/// Agrees with compute_momentum on the reduced general form up to rounding.
inline QuantizedState wei_hua_momentum(const WeiHuaParams& w,
                                       const PhysicalConstants& k, int n) {
    w.validate();
    k.validate();
    const double ks = k.kinetic_scale(w.alpha);
    const double one_m = 1.0 - 1.0 / w.q;
    const double radicand = ks * (w.q_tilde * one_m * one_m) + 0.25;
    if (radicand < 0.0) throw RNotRealError(radicand);
    const double r = 0.5 + std::sqrt(radicand);
    const double K = ks * (2.0 * w.q_tilde / w.q - 2.0 * w.q_tilde);
    return detail::make_state(n, r, K, ks, w.q_tilde, k.c);
}

/// Manning-Rosen route. The alpha factors cancel exactly:
///   1/R = 1/2 + sqrt( (2 m c^2/hbar^2) beta(beta-1) + 1/4 ),
///   K   = 2 m c^2 V0 / hbar^2,
///   P_n = -(hbar^2 alpha^2 / 2 m c^3) gamma1^2.
inline QuantizedState manning_rosen_momentum(const ManningRosenParams& mr,
                                             const PhysicalConstants& k, int n) {
    mr.validate();
    k.validate();
    const double two_m_over_h2 = 2.0 * k.mc2 / (k.hbar * k.hbar);
    const double radicand = two_m_over_h2 * mr.beta * (mr.beta - 1.0) + 0.25;
    if (radicand < 0.0) throw RNotRealError(radicand);
    const double r = 0.5 + std::sqrt(radicand);
    const double K = two_m_over_h2 * mr.V0;
    const double ks = k.kinetic_scale(mr.alpha);
    return detail::make_state(n, r, K, ks, 0.0, k.c);
}

/// Validated collection of states n = 0..n_max sharing one 1/R.
struct MomentumSpectrum {
    GeneralMolecularPotential potential;
    PhysicalConstants constants;
    InverseR inv_R;
    int n_max = 0;
    std::vector<QuantizedState> states;

    /// Smallest gamma1 among bound states; 0 when none are bound.
    double min_bound_gamma1() const {
        double g = 0.0;
        for (const auto& st : states)
            if (st.bound() && (g == 0.0 || st.gamma1 < g)) g = st.gamma1;
        return g;
    }
};

inline MomentumSpectrum compute_spectrum(const GeneralMolecularPotential& p,
                                         const PhysicalConstants& k, int n_max) {
    if (n_max < 0) throw ValidationError("n_max", "must be >= 0");
    MomentumSpectrum sp;
    sp.potential = p;
    sp.constants = k;
    sp.inv_R = compute_inv_R(p, k); // aborts the whole spectrum if R not real
    sp.n_max = n_max;
    sp.states.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        sp.states.push_back(compute_momentum(p, k, n));
    return sp;
}

} // namespace fhmp
