#pragma once

#include <cmath>
#include <string>

#include "fhmp/errors.hpp"

namespace fhmp {

namespace detail {
inline void check_jacobi_params(double a, double b) {
    if (!(a > -1.0))
        throw ValidationError("a", "Jacobi parameter must be > -1, got " +
                                       std::to_string(a));
    if (!(b > -1.0))
        throw ValidationError("b", "Jacobi parameter must be > -1, got " +
                                       std::to_string(b));
}
} // namespace detail

/// P_n^{(a,b)}(x) by the standard three-term recurrence. Exact for n = 0, 1.
/// For a, b > -1 the recurrence coefficients never vanish: 2k+a+b-2 > 0 and
/// k+a+b > 0 for all k >= 2.
inline double jacobi(int n, double a, double b, double x) {
    detail::check_jacobi_params(a, b);
    if (n < 0) throw ValidationError("n", "degree must be >= 0");
    if (n == 0) return 1.0;

    double y0 = 1.0;
    double y1 = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for (int k = 2; k <= n; ++k) {
        const double two_k_ab = 2.0 * k + a + b;
        const double denom = 2.0 * k * (k + a + b) * (two_k_ab - 2.0);
        const double c1 =
            (two_k_ab - 1.0) *
            ((two_k_ab) * (two_k_ab - 2.0) * x + a * a - b * b);
        const double c0 = -2.0 * (k + a - 1.0) * (k + b - 1.0) * two_k_ab;
        const double y2 = (c1 * y1 + c0 * y0) / denom;
        y0 = y1;
        y1 = y2;
    }
    return y1;
}

/// d/dx P_n^{(a,b)}(x) = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}(x).
inline double jacobi_derivative(int n, double a, double b, double x) {
    detail::check_jacobi_params(a, b);
    if (n <= 0) return 0.0;
    return 0.5 * (n + a + b + 1.0) * jacobi(n - 1, a + 1.0, b + 1.0, x);
}

} // namespace fhmp
