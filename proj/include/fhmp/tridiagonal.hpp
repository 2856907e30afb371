#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "fhmp/errors.hpp"

namespace fhmp {

/// Symmetric tridiagonal matrix: diag.size() = n, off.size() = n - 1.
struct TridiagonalOperator {
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t size() const { return diag.size(); }

    void validate() const {
        if (diag.empty())
            throw ValidationError("diag", "operator must be non-empty");
        if (off.size() + 1 != diag.size())
            throw ValidationError("off", "off-diagonal must have n-1 entries");
    }
};

/// Interval certain to contain the whole spectrum.
inline std::pair<double, double> gershgorin_bounds(const TridiagonalOperator& op) {
    op.validate();
    const std::size_t n = op.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        const double radius = (i > 0 ? std::abs(op.off[i - 1]) : 0.0) +
                              (i + 1 < n ? std::abs(op.off[i]) : 0.0);
        lo = std::min(lo, op.diag[i] - radius);
        hi = std::max(hi, op.diag[i] + radius);
    }
    return {lo, hi};
}

/// Number of eigenvalues strictly below x, by the Sturm sequence sign count
/// (negative pivots of the shifted LDL^T recurrence). A vanishing pivot is
/// replaced by |e|/eps in the classic bisection manner.
inline int count_below(const TridiagonalOperator& op, double x) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const std::size_t n = op.size();
    int count = 0;
    double u = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = 0.0;
        if (i > 0) {
            const double e = op.off[i - 1];
            v = (u != 0.0) ? e * e / u : std::abs(e) / eps;
        }
        u = op.diag[i] - x - v;
        if (u < 0.0) ++count;
    }
    return count;
}

/// The `count` smallest eigenvalues by bisection on the Sturm count.
/// Each bracket is driven to the per-eigenvalue rounding floor, which is
/// always within 1e-12 of the spectral scale and usually far tighter.
inline std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op,
                                              int count) {
    if (count < 1) throw ValidationError("count", "must be >= 1");
    op.validate();
    constexpr double eps = std::numeric_limits<double>::epsilon();
    auto [glo, ghi] = gershgorin_bounds(op);

    std::vector<double> eigs;
    eigs.reserve(static_cast<std::size_t>(count));
    double lo_start = glo;
    for (int k = 1; k <= count; ++k) {
        double lo = lo_start;
        double hi = ghi;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break; // at the rounding floor
            if (count_below(op, mid) >= k)
                hi = mid;
            else
                lo = mid;
            if (hi - lo <= 2.0 * eps * (std::abs(lo) + std::abs(hi))) break;
        }
        eigs.push_back(0.5 * (lo + hi));
        lo_start = lo; // eigenvalues are returned in ascending order
    }
    return eigs;
}

/// Eigenvector for an isolated eigenvalue estimate, by inverse iteration
/// with a partially pivoted tridiagonal solve. Normalized to unit 2-norm.
inline std::vector<double> eigenvector(const TridiagonalOperator& op,
                                       double lambda) {
    op.validate();
    const std::size_t n = op.size();
    auto [glo, ghi] = gershgorin_bounds(op);
    const double scale = std::max(std::abs(glo), std::abs(ghi));
    const double shift = lambda + 1e-11 * scale; // detune from exact singularity

    // band storage for (T - shift I) with one fill-in superdiagonal
    std::vector<double> a(n), b(n), c(n), d(n);
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int pass = 0; pass < 3; ++pass) {
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = (i > 0) ? op.off[i - 1] : 0.0;
            b[i] = op.diag[i] - shift;
            c[i] = (i + 1 < n) ? op.off[i] : 0.0;
            d[i] = 0.0;
        }
        std::vector<double> y = x;
        // forward elimination with row swaps
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(a[i + 1]) > std::abs(b[i])) {
                std::swap(b[i], a[i + 1]);
                std::swap(c[i], b[i + 1]);
                std::swap(d[i], c[i + 1]);
                std::swap(y[i], y[i + 1]);
            }
            if (b[i] == 0.0) b[i] = 1e-300;
            const double m = a[i + 1] / b[i];
            b[i + 1] -= m * c[i];
            c[i + 1] -= m * d[i];
            y[i + 1] -= m * y[i];
        }
        if (b[n - 1] == 0.0) b[n - 1] = 1e-300;
        // back substitution
        for (std::size_t ii = n; ii-- > 0;) {
            double s = y[ii];
            if (ii + 1 < n) s -= c[ii] * x[ii + 1];
            if (ii + 2 < n) s -= d[ii] * x[ii + 2];
            x[ii] = s / b[ii];
        }
        double nrm = 0.0;
        for (double v : x) nrm += v * v;
        nrm = std::sqrt(nrm);
        if (!(nrm > 0.0) || !std::isfinite(nrm))
            throw NumericalError("inverse iteration produced a zero vector");
        for (double& v : x) v /= nrm;
    }
    return x;
}

} // namespace fhmp
