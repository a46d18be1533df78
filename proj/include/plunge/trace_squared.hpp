#pragma once

// Tr S²_{A,B} for unions of axis-parallel boxes.
//
// Tr S² is the squared Hilbert-Schmidt norm of the kernel, which separates
// over box 4-tuples and coordinates into double oscillatory integrals
//     W(I1, I2, J1, J2) = ∬ e^{2πizw} |I1 ∩ (I2 − z)| |J1 ∩ (J2 − w)| dz dw.
// The w-integral is done in closed form per linear piece of the trapezoid
// profile, the z-integral by composite Gauss-Legendre panels.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "plunge/geometry.hpp"
#include "plunge/specfun.hpp"

namespace plunge {

/// z ↦ |I1 ∩ (I2 − z)|: zero outside [p1, p4], rising on [p1, p2], flat on
/// [p2, p3], falling on [p3, p4].
struct OverlapProfile {
    double p1 = 0.0, p2 = 0.0, p3 = 0.0, p4 = 0.0;
    double plateau = 0.0;

    double operator()(double z) const;
    double support_radius() const { return std::max(std::abs(p1), std::abs(p4)); }
};

OverlapProfile overlap_profile(const Interval& i1, const Interval& i2);

struct WValue {
    std::complex<double> value;
    double abs_error_bound = 0.0;
};

/// ∫ (γw + δ) e^{i a w} dw over [lo, hi], closed form (Taylor series when
/// |a| max(|lo|, |hi|) is small).
std::complex<double> linear_fourier_piece(double gamma, double delta, double lo, double hi, double a);

/// G(z) = ∫ profile(w) e^{2πizw} dw.
std::complex<double> profile_fourier(const OverlapProfile& profile, double z);

WValue w_integral(const Interval& i1, const Interval& i2, const Interval& j1, const Interval& j2);

struct Trs2Value {
    double value = 0.0;
    double imaginary_residue = 0.0;
    double abs_error_bound = 0.0;
};

/// Σ over box 4-tuples of Π over coordinates of W. A and B must have disjoint
/// interiors (see normalize_box_union).
Trs2Value trs2_box_union(const BoxUnion& a, const BoxUnion& b);

/// Closed form of Tr S²_{[0,c],[0,1]}:
///   c − log c/π² − (1+γ+log 2π)/π² + (2/π)c(Si(2πc) − π/2) + cos(2πc)/π² + Ci(2πc)/π².
template <typename Scalar>
Scalar trs2_interval_explicit(Scalar c) {
    using std::cos;
    using std::log;
    if (!(c > 0)) throw DomainError("trs2_interval_explicit: c must be positive");
    const Scalar pi = constants::pi<Scalar>;
    const Scalar pi2 = pi * pi;
    const Scalar t = 2 * pi * c;
    const Scalar smooth = c - log(c) / pi2 - (1 + constants::euler_gamma<Scalar> + log(2 * pi)) / pi2;
    const Scalar oscillating = 2 / pi * c * sine_integral_minus_half_pi(t).value + cos(t) / pi2 +
                               cosine_integral(t).value / pi2;
    return smooth + oscillating;
}

/// Smooth part plus the first N terms of both oscillating asymptotic sums.
template <typename Scalar>
Scalar trs2_asymptotic(Scalar c, int N) {
    using std::cos;
    using std::log;
    using std::sin;
    if (!(c > 0)) throw DomainError("trs2_asymptotic: c must be positive");
    if (N < 0) throw DomainError("trs2_asymptotic: N must be non-negative");
    const Scalar pi = constants::pi<Scalar>;
    const Scalar pi2 = pi * pi;
    const Scalar t = 2 * pi * c;
    Scalar value = c - log(c) / pi2 - (1 + constants::euler_gamma<Scalar> + log(2 * pi)) / pi2;
    Scalar cos_sum = 0;
    Scalar sin_sum = 0;
    Scalar odd_factorial = 1;  // (2n-1)!
    Scalar t_2n = t * t;
    for (int n = 1; n <= N; ++n) {
        const Scalar f_2n = odd_factorial * Scalar(2 * n);
        const Scalar f_2n1 = f_2n * Scalar(2 * n + 1);
        const Scalar t_2n1 = t_2n * t;
        const Scalar sign = (n % 2 == 0) ? Scalar(1) : Scalar(-1);
        cos_sum += sign * (f_2n - odd_factorial) / t_2n;
        sin_sum += sign * (f_2n1 - f_2n) / t_2n1;
        odd_factorial = f_2n1;
        t_2n = t_2n1 * t;
    }
    return value - cos(t) / pi2 * cos_sum - sin(t) / pi2 * sin_sum;
}

/// |first omitted term| of trs2_asymptotic(c, N) (the cos-sum term n = N+1).
double trs2_asymptotic_next_term(double c, int N);

struct SeparatedUnionReport {
    int N = 0;
    int k = 0;
    BoxUnion a;
    double trace = 0.0;           ///< Tr S = |A_k||B|
    double trace_squared = 0.0;   ///< Tr S² via trs2_box_union
    double lambda1_bound = 0.0;   ///< √(Tr S²)
    double abs_error_bound = 0.0;
};

/// A_k = ∪_{m=1}^N [Nm, Nm + 1/(N 2^k)] against the frequency interval B.
SeparatedUnionReport separated_union_demo(int N, int k, const Interval& b);

}  // namespace plunge
