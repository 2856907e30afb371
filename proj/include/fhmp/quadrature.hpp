#pragma once

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "fhmp/errors.hpp"

namespace fhmp {

/// Nodes and weights on (-1, 1). Nodes strictly increasing, weights
/// positive and summing to 2.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    void validate() const {
        if (nodes.size() != weights.size() || nodes.empty())
            throw ValidationError("nodes", "empty or mismatched rule");
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (!(weights[i] > 0.0))
                throw ValidationError("weights", "must be positive");
            if (i > 0 && !(nodes[i] > nodes[i - 1]))
                throw ValidationError("nodes", "must be strictly increasing");
            sum += weights[i];
        }
        if (std::abs(sum - 2.0) > 1e-12)
            throw ValidationError("weights", "must sum to 2, got " +
                                                 std::to_string(sum));
    }

    /// Integrate f over [lo, hi] by affine transplant of the rule.
    template <class F>
    double integrate(F&& f, double lo, double hi) const {
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            acc += weights[i] * f(mid + half * nodes[i]);
        return acc * half;
    }
};

/// Gauss-Legendre rule: Newton iteration on the Legendre recurrence, node
/// tolerance 1e-15, at most 100 iterations per root (non-convergence is a
/// hard error). Exact for polynomials of degree <= 2 npoints - 1.
inline QuadratureRule gauss_legendre(int npoints) {
    if (npoints < 1) throw ValidationError("npoints", "must be >= 1");
    const int n = npoints;
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi-style initial guess for the i-th root (descending order)
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            // p1 = P_n(x), p0 = P_{n-1}(x)
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-15) {
                converged = true;
                break;
            }
        }
        if (!converged && n > 1)
            throw ConvergenceError("Gauss-Legendre Newton iteration failed for "
                                   "npoints = " + std::to_string(n));
        if (n == 1) {
            x = 0.0;
            rule.nodes[0] = 0.0;
            rule.weights[0] = 2.0;
            break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x; // roots found in descending order; mirror to front
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1 && n > 1) rule.nodes[n / 2] = 0.0; // exact middle root
    rule.validate();
    return rule;
}

} // namespace fhmp
