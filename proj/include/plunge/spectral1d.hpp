#pragma once

// One-dimensional time-frequency localization spectra by Nyström
// discretization of the sinc kernel, and singular values of the restricted
// operators I_r = Q_[0,1] P_[0,r] and J_r = P_{|x|>2r} Q P_[-r,r].

#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <string>

#include "plunge/quadrature.hpp"

namespace plunge {

enum class OperatorKind { localization_1d, product_d, jr, ir };

std::string to_string(OperatorKind kind);

struct Descriptor {
    OperatorKind kind = OperatorKind::localization_1d;
    double parameter = 0.0;  ///< c for localization spectra, r for I_r / J_r
    int dimension = 1;
    /// Expected trace c^d |A||B| (sum of squares for singular-value kinds);
    /// NaN when there is no closed form.
    double volume = std::numeric_limits<double>::quiet_NaN();
};

/// Descending eigenvalues or singular values. Values below `floor` are kept
/// but untrusted.
struct Spectrum {
    Eigen::VectorXd values;
    Descriptor descriptor;
    Eigen::Index nodes = 0;
    double floor = 0.0;
    /// Each value is certified only within ± this (domain truncation).
    double truncation_tail = 0.0;
    /// Number of values pulled back into [0, 1] by rounding-level clipping.
    Eigen::Index clipped = 0;

    Eigen::Index size() const { return values.size(); }
    bool trusted(Eigen::Index i) const { return values(i) >= floor; }
    Eigen::Index trusted_count() const;
    Eigen::VectorXd trusted_values() const { return values.head(trusted_count()); }
};

inline constexpr double kLocalizationFloor = 1e-13;
inline constexpr double kClipSlack = 1e-10;

/// Smallest admissible node count for an interval of time-bandwidth c.
Eigen::Index required_nodes(double c);

/// sin(pi u) / (pi u), equal to 1 at u = 0.
template <typename Scalar>
Scalar sinc_pi(Scalar u) {
    using std::abs;
    using std::sin;
    const Scalar x = constants::pi<Scalar> * u;
    if (abs(x) < Scalar(1e-4)) {
        const Scalar x2 = x * x;
        return 1 - x2 / 6 * (1 - x2 / 20 * (1 - x2 / 42));
    }
    return sin(x) / x;
}

/// Symmetric Nyström matrix sqrt(w_i) K(x_i, x_j) sqrt(w_j) of the kernel
/// sin(pi b (x - y)) / (pi (x - y)) on the given rule.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sinc_nystrom_matrix(const QuadratureRule<Scalar>& rule,
                                                                          Scalar bandwidth = Scalar(1)) {
    using std::sqrt;
    const Eigen::Index n = rule.size();
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> root = rule.weights.array().sqrt().matrix();
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = j; i < n; ++i) {
            const Scalar k = bandwidth * sinc_pi<Scalar>(bandwidth * (rule.nodes(i) - rule.nodes(j)));
            m(i, j) = m(j, i) = root(i) * k * root(j);
        }
    }
    return m;
}

/// Eigenvalues of S_{[0,c],[-1/2,1/2]}, descending.
Spectrum localization_spectrum(double c, Eigen::Index n_nodes);
Spectrum localization_spectrum(double c);

/// Eigenvalues of S_{[0,a],[-b/2,b/2]}; equals localization_spectrum(a*b).
Spectrum localization_spectrum_scaled(double a, double b, Eigen::Index n_nodes);

/// Hilbert-Schmidt bound on the strip |x| > R dropped from J_r.
double jr_truncation_tail(double r, double R);

/// Singular values of J_r with x restricted to 2r <= |x| <= R. Each value is
/// within ± truncation_tail of the untruncated operator (Weyl).
Spectrum jr_singular_values(double r, double R, Eigen::Index n_nodes);

/// Singular values of J_r on the full domain |x| > 2r, from the Gram kernel
/// sinc(y - y') - ∫_{-2r}^{2r} sinc(x - y) sinc(x - y') dx on [-r, r].
Spectrum jr_singular_values(double r, Eigen::Index n_nodes);

struct Rank2TailBound {
    double bound;             ///< (√2/π) 2^{-N}
    double intermediate_sum;  ///< (√2/π) Σ_{n>N} 2^{-n}/(2n+1)
};

/// Bound on σ_{2N+3}(J_r) from the rank-two expansion of the sinc kernel.
Rank2TailBound jr_rank2_tail_bound(int N);

/// Singular values of I_r = Q_[0,1] P_[0,r], computed directly from the
/// even and odd parts of the Fourier restriction (no square roots of
/// eigenvalues, so tiny values stay resolved).
Spectrum ir_singular_values(double r, Eigen::Index n_nodes);

}  // namespace plunge
