#pragma once

#include <Eigen/Core>
#include <cmath>
#include <functional>
#include <limits>

#include "plunge/errors.hpp"
#include "plunge/specfun.hpp"

namespace plunge {

template <typename Scalar>
struct QuadratureRule {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> nodes;    // strictly increasing
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;  // positive, sum = b - a

    Eigen::Index size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [a, b] (Newton iteration on the
/// three-term recurrence, roots seeded from the Tricomi approximation).
template <typename Scalar = double>
QuadratureRule<Scalar> gauss_legendre(Eigen::Index n, Scalar a, Scalar b) {
    using std::abs;
    using std::cos;
    if (n < 1) throw DomainError("gauss_legendre: need at least one node");
    if (!(a < b)) throw DomainError("gauss_legendre: need a < b");
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar pi = constants::pi<Scalar>;
    QuadratureRule<Scalar> rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const Scalar mid = (a + b) / 2;
    const Scalar half = (b - a) / 2;
    const Eigen::Index m = (n + 1) / 2;
    for (Eigen::Index i = 0; i < m; ++i) {
        Scalar z = cos(pi * (Scalar(i) + Scalar(0.75)) / (Scalar(n) + Scalar(0.5)));
        Scalar dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            Scalar p0 = 1;
            Scalar p1 = z;
            for (Eigen::Index k = 2; k <= n; ++k) {
                const Scalar p2 = ((2 * Scalar(k) - 1) * z * p1 - (Scalar(k) - 1) * p0) / Scalar(k);
                p0 = p1;
                p1 = p2;
            }
            dp = Scalar(n) * (z * p1 - p0) / (z * z - 1);
            const Scalar step = p1 / dp;
            z -= step;
            if (abs(step) <= 4 * eps) break;
        }
        // Recompute the derivative at the converged root.
        {
            Scalar p0 = 1;
            Scalar p1 = z;
            for (Eigen::Index k = 2; k <= n; ++k) {
                const Scalar p2 = ((2 * Scalar(k) - 1) * z * p1 - (Scalar(k) - 1) * p0) / Scalar(k);
                p0 = p1;
                p1 = p2;
            }
            dp = Scalar(n) * (z * p1 - p0) / (z * z - 1);
        }
        const Scalar w = 2 / ((1 - z * z) * dp * dp);
        rule.nodes(i) = mid - half * z;
        rule.nodes(n - 1 - i) = mid + half * z;
        rule.weights(i) = half * w;
        rule.weights(n - 1 - i) = half * w;
    }
    if (n % 2 == 1) rule.nodes(n / 2) = mid;
    return rule;
}

/// Composite Gauss-Legendre rule: [a, b] split into equal panels of width at
/// most max_panel, each carrying per_panel nodes.
QuadratureRule<double> composite_gauss_legendre(double a, double b, double max_panel, Eigen::Index per_panel);

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
};

/// Adaptive Gauss-Kronrod (7-15) integration of a smooth-on-pieces integrand.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol = 1e-14, double rel_tol = 1e-13, int max_depth = 60);

}  // namespace plunge
