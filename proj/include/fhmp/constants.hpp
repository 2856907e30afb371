#pragma once

#include "fhmp/errors.hpp"

namespace fhmp {

/// Physical constants entering the kinetic prefactor hbar^2/(2 m c^2).
/// The rest energy m c^2 is kept as a single quantity. Natural units
/// (m = hbar = c = 1) are the defaults used by all figure parameter sets.
struct PhysicalConstants {
    double mc2 = 1.0;  ///< rest mass-energy m c^2
    double hbar = 1.0;
    double c = 1.0;

    void validate() const {
        if (!(mc2 > 0.0)) throw ValidationError("mc2", "must be > 0");
        if (!(hbar > 0.0)) throw ValidationError("hbar", "must be > 0");
        if (!(c > 0.0)) throw ValidationError("c", "must be > 0");
    }

    /// hbar^2 / (2 m c^2), the coefficient of -d^2/dt^2.
    double kinetic_factor() const { return hbar * hbar / (2.0 * mc2); }

    /// 2 m c^2 / (hbar^2 alpha^2), the dimensionless scale multiplying
    /// every potential strength in the closed-form spectrum.
    double kinetic_scale(double alpha) const {
        return 1.0 / (kinetic_factor() * alpha * alpha);
    }
};

} // namespace fhmp
