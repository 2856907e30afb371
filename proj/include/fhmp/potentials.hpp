#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "fhmp/errors.hpp"

namespace fhmp {

/// Eight-parameter exponential molecular potential
///
///   V(t) = [A - B e^{-a(t-te)} + q~ (C - D e^{-a(t-te)})^2] / [1 - q e^{-a(t-te)}]^2
///
/// with screening rate a = alpha > 0. For q > 0 the denominator vanishes at
/// t_s = t_e + ln(q)/alpha; validation requires t_s <= 0 so the singularity
/// never enters the t > 0 window. For q < 0 there is no real singular time.
struct GeneralMolecularPotential {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
    double alpha = 0.0;    ///< screening parameter, inverse time
    double q = 0.0;        ///< denominator deformation, must be nonzero
    double q_tilde = 0.0;  ///< strength of the squared term
    double t_e = 0.0;      ///< equilibrium time point

    /// Singular time t_s = t_e + ln(q)/alpha; empty when q <= 0.
    std::optional<double> singular_time() const {
        if (q <= 0.0) return std::nullopt;
        return t_e + std::log(q) / alpha;
    }

    void validate() const {
        if (!(alpha > 0.0)) throw ValidationError("alpha", "must be > 0");
        if (q == 0.0) throw ValidationError("q", "must be nonzero");
        if (auto ts = singular_time(); ts && *ts > 0.0) {
            throw ValidationError(
                "q", "singular time t_s = " + std::to_string(*ts) +
                         " must satisfy t_e + ln(q)/alpha <= 0");
        }
    }

    /// Limit of V as t -> infinity.
    double asymptote() const { return A + q_tilde * C * C; }

    /// Evaluate V(t). Throws EvalDomainError when |1 - q e^{-alpha(t-te)}|
    /// falls below denom_floor (near-singular evaluation instead of huge
    /// finite garbage).
    double value(double t, double denom_floor = 1e-12) const {
        const double u = std::exp(-alpha * (t - t_e));
        const double denom = 1.0 - q * u;
        if (std::abs(denom) < denom_floor) {
            throw EvalDomainError("potential evaluated within " +
                                  std::to_string(denom_floor) +
                                  " of the singular time at t = " +
                                  std::to_string(t));
        }
        const double cd = C - D * u;
        return (A - B * u + q_tilde * cd * cd) / (denom * denom);
    }
};

/// Bond-stretching oscillator: the q~ [(1-e^{-a(t-te)})/(1-q e^{-a(t-te)})]^2
/// special case. q = 1 is excluded (potential identically zero, R degenerate).
struct WeiHuaParams {
    double alpha = 0.0;
    double q = 0.0;
    double q_tilde = 0.0;
    double t_e = 0.0;

    void validate() const {
        if (!(alpha > 0.0)) throw ValidationError("alpha", "must be > 0");
        if (q == 0.0) throw ValidationError("q", "must be nonzero");
        if (q == 1.0) throw ValidationError("q", "q = 1 is degenerate");
        if (q > 0.0) {
            const double ts = t_e + std::log(q) / alpha;
            if (ts > 0.0)
                throw ValidationError("q", "singular time t_s = " +
                                               std::to_string(ts) +
                                               " must be <= 0");
        }
    }
};

/// Screened molecular potential with strengths V0 and beta.
/// beta(beta-1) + V0 >= 0 keeps the squared-term coefficient non-negative.
struct ManningRosenParams {
    double alpha = 0.0;
    double V0 = 0.0;
    double beta = 0.0;
    double t_e = 0.0;

    void validate() const {
        if (!(alpha > 0.0)) throw ValidationError("alpha", "must be > 0");
        if (beta * (beta - 1.0) + V0 < 0.0)
            throw ValidationError("beta",
                                  "beta(beta-1) + V0 must be >= 0, got " +
                                      std::to_string(beta * (beta - 1.0) + V0));
        if (t_e > 0.0)
            throw ValidationError("t_e", "must be <= 0 (q = 1 puts the "
                                         "singular time at t_e)");
    }
};

/// Substitute A = B = 0, C = D = 1 into the general form.
inline GeneralMolecularPotential reduce_wei_hua(const WeiHuaParams& w) {
    w.validate();
    GeneralMolecularPotential p;
    p.A = 0.0;
    p.B = 0.0;
    p.C = 1.0;
    p.D = 1.0;
    p.alpha = w.alpha;
    p.q = w.q;
    p.q_tilde = w.q_tilde;
    p.t_e = w.t_e;
    return p;
}

/// Substitute A = C = 0, q = 1, B = V0 alpha^2 into the general form. Only
/// the product q~ D^2 = alpha^2 (beta(beta-1) + V0) is determined by the
/// parameters; the split q~ = 1, D = alpha sqrt(beta(beta-1)+V0) is a
/// convention (with C = 0 nothing downstream can observe the split).
inline GeneralMolecularPotential reduce_manning_rosen(const ManningRosenParams& mr) {
    mr.validate();
    GeneralMolecularPotential p;
    p.A = 0.0;
    p.B = mr.V0 * mr.alpha * mr.alpha;
    p.C = 0.0;
    p.D = mr.alpha * std::sqrt(mr.beta * (mr.beta - 1.0) + mr.V0);
    p.alpha = mr.alpha;
    p.q = 1.0;
    p.q_tilde = 1.0;
    p.t_e = mr.t_e;
    return p;
}

/// Direct evaluation of the Wei-Hua closed form (independent of the
/// general-form route; used by equivalence checks).
inline double wei_hua_value(const WeiHuaParams& w, double t) {
    const double u = std::exp(-w.alpha * (t - w.t_e));
    const double ratio = (1.0 - u) / (1.0 - w.q * u);
    return w.q_tilde * ratio * ratio;
}

/// Direct evaluation of the Manning-Rosen closed form.
inline double manning_rosen_value(const ManningRosenParams& mr, double t) {
    const double a2 = mr.alpha * mr.alpha;
    const double u = std::exp(-mr.alpha * (t - mr.t_e));
    const double denom = 1.0 - u;
    return (-mr.V0 * a2 * u + a2 * (mr.beta * (mr.beta - 1.0) + mr.V0) * u * u) /
           (denom * denom);
}

} // namespace fhmp
