#pragma once

// Sine, cosine and exponential integrals for real arguments.
//
// All routines are templated on the scalar type so the same code runs in
// double and in long double (the latter is used where an asymptotic remainder
// has to be resolved below double rounding).

#include <cmath>
#include <complex>
#include <limits>

#include "plunge/errors.hpp"

namespace plunge {

template <typename Scalar>
struct SpecialValue {
    Scalar value;
    Scalar abs_error_bound;
};

namespace constants {
template <typename Scalar>
inline constexpr Scalar pi = Scalar(3.141592653589793238462643383279502884L);
template <typename Scalar>
inline constexpr Scalar euler_gamma = Scalar(0.577215664901532860606512090082402431L);
}  // namespace constants

/// Below this radius Si and Ci use their power series, above it the
/// continued fraction of E1(it).
inline constexpr double kSiCiSeriesRadius = 4.0;
/// Below this argument E1 uses its power series, above it a continued fraction.
inline constexpr double kE1SeriesRadius = 1.0;

namespace detail {

template <typename Scalar>
SpecialValue<Scalar> si_series(Scalar t) {
    using std::abs;
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar t2 = t * t;
    Scalar power = t;  // (-1)^k t^{2k+1} / (2k+1)!
    Scalar sum = t;
    Scalar magnitude = abs(t);
    Scalar last = abs(t);
    for (int k = 1; k < 200; ++k) {
        power *= -t2 / Scalar((2 * k) * (2 * k + 1));
        const Scalar term = power / Scalar(2 * k + 1);
        sum += term;
        magnitude += abs(term);
        last = abs(term);
        if (last <= eps * abs(sum)) break;
    }
    return {sum, last + 4 * eps * magnitude};
}

// Ci(t) - gamma - log(t) as a power series.
template <typename Scalar>
SpecialValue<Scalar> ci_series_regular(Scalar t) {
    using std::abs;
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar t2 = t * t;
    Scalar power = 1;  // (-1)^k t^{2k} / (2k)!
    Scalar sum = 0;
    Scalar magnitude = 0;
    Scalar last = 0;
    for (int k = 1; k < 200; ++k) {
        power *= -t2 / Scalar((2 * k - 1) * (2 * k));
        const Scalar term = power / Scalar(2 * k);
        sum += term;
        magnitude += abs(term);
        last = abs(term);
        if (last <= eps * abs(sum)) break;
    }
    return {sum, last + 4 * eps * magnitude};
}

// E1(i t) = -Ci(t) + i (Si(t) - pi/2) for t > 0, modified Lentz evaluation.
template <typename Scalar>
std::complex<Scalar> e1_imaginary_cf(Scalar t) {
    using C = std::complex<Scalar>;
    using std::abs;
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar tiny = std::numeric_limits<Scalar>::min() / eps;
    C b(1, t);
    C c(1 / tiny, 0);
    C d = C(1) / b;
    C h = d;
    for (int i = 2; i < 100000; ++i) {
        const Scalar a = -Scalar(i - 1) * Scalar(i - 1);
        b += Scalar(2);
        d = C(1) / (a * d + b);
        c = b + a / c;
        const C del = c * d;
        h *= del;
        if (abs(del - Scalar(1)) < eps) {
            using std::cos;
            using std::sin;
            return C(cos(t), -sin(t)) * h;
        }
    }
    throw NumericError("e1_imaginary_cf: continued fraction did not converge");
}

}  // namespace detail

/// Si(t) = integral of sin(x)/x over [0, t].
template <typename Scalar>
SpecialValue<Scalar> sine_integral(Scalar t) {
    using std::abs;
    if (!std::isfinite(static_cast<double>(t))) throw DomainError("sine_integral: non-finite argument");
    if (t == 0) return {Scalar(0), Scalar(0)};
    if (abs(t) <= Scalar(kSiCiSeriesRadius)) return detail::si_series(t);
    const Scalar x = abs(t);
    const auto e1 = detail::e1_imaginary_cf(x);
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar value = constants::pi<Scalar> / 2 + e1.imag();
    return {t < 0 ? -value : value, 16 * eps * (1 + abs(value))};
}

/// Si(t) - pi/2 for t > 0, without the cancellation of forming Si first.
template <typename Scalar>
SpecialValue<Scalar> sine_integral_minus_half_pi(Scalar t) {
    using std::abs;
    if (!(t > 0)) throw DomainError("sine_integral_minus_half_pi: argument must be positive");
    if (t <= Scalar(kSiCiSeriesRadius)) {
        auto s = detail::si_series(t);
        return {s.value - constants::pi<Scalar> / 2, s.abs_error_bound};
    }
    const auto e1 = detail::e1_imaginary_cf(t);
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    return {e1.imag(), 16 * eps * abs(e1)};
}

/// Ci(t) = -integral of cos(x)/x over [t, inf), t > 0.
template <typename Scalar>
SpecialValue<Scalar> cosine_integral(Scalar t) {
    using std::abs;
    using std::log;
    if (!(t > 0)) throw DomainError("cosine_integral: argument must be positive");
    if (!std::isfinite(static_cast<double>(t))) throw DomainError("cosine_integral: non-finite argument");
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    if (t <= Scalar(kSiCiSeriesRadius)) {
        const auto reg = detail::ci_series_regular(t);
        const Scalar head = constants::euler_gamma<Scalar> + log(t);
        return {head + reg.value, reg.abs_error_bound + 4 * eps * (abs(head) + 1)};
    }
    const auto e1 = detail::e1_imaginary_cf(t);
    return {-e1.real(), 16 * eps * abs(e1)};
}

/// E1(t) = integral of exp(-x)/x over [t, inf), t > 0.
template <typename Scalar>
SpecialValue<Scalar> exp_integral_e1(Scalar t) {
    using std::abs;
    using std::exp;
    using std::log;
    if (!(t > 0)) throw DomainError("exp_integral_e1: argument must be positive");
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    if (t <= Scalar(kE1SeriesRadius)) {
        Scalar power = 1;  // (-1)^{k+1} t^k / k!
        Scalar sum = 0;
        Scalar magnitude = 0;
        Scalar last = 0;
        for (int k = 1; k < 200; ++k) {
            power *= -t / Scalar(k);
            const Scalar term = -power / Scalar(k);
            sum += term;
            magnitude += abs(term);
            last = abs(term);
            if (last <= eps * abs(sum)) break;
        }
        const Scalar head = -constants::euler_gamma<Scalar> - log(t);
        const Scalar value = head + sum;
        return {value, last + 4 * eps * (magnitude + abs(head) + abs(value))};
    }
    if (t > Scalar(std::numeric_limits<Scalar>::max_exponent)) {
        // exp(-t) underflows; E1 lies in (e^{-t}/(t+1), e^{-t}/t).
        return {Scalar(0), Scalar(0)};
    }
    const Scalar tiny = std::numeric_limits<Scalar>::min() / eps;
    Scalar b = t + 1;
    Scalar c = 1 / tiny;
    Scalar d = 1 / b;
    Scalar h = d;
    for (int i = 1; i < 100000; ++i) {
        const Scalar a = -Scalar(i) * Scalar(i);
        b += 2;
        d = 1 / (a * d + b);
        c = b + a / c;
        const Scalar del = c * d;
        h *= del;
        if (abs(del - 1) < eps) {
            const Scalar value = h * exp(-t);
            return {value, 16 * eps * value};
        }
    }
    throw NumericError("exp_integral_e1: continued fraction did not converge");
}

/// Large-t asymptotic expansions of Si and Ci, truncated at the smallest term.
template <typename Scalar>
struct SiCiAsymptotic {
    Scalar si;
    Scalar ci;
    Scalar truncation;  ///< magnitude of the first omitted term
};

template <typename Scalar>
SiCiAsymptotic<Scalar> si_ci_asymptotic(Scalar t) {
    using std::abs;
    using std::cos;
    using std::sin;
    if (!(t > 0)) throw DomainError("si_ci_asymptotic: argument must be positive");
    // f = sum (-1)^n (2n)!/t^{2n+1}, g = sum_{n>=1} (-1)^n (2n-1)!/t^{2n}.
    // Consecutive terms of the merged sequence (2n)!/t^{2n+1}, (2n+1)!/t^{2n+2}, ...
    // have ratio m/t, so the smallest term sits at m ~ t.
    Scalar f = 0;
    Scalar g = 0;
    Scalar term = 1 / t;  // m!/t^{m+1}, m = 0
    Scalar omitted = term;
    for (int m = 0; m < 100000; ++m) {
        const Scalar next = term * Scalar(m + 1) / t;
        const int n = m / 2;
        const Scalar sign = (n % 2 == 0) ? Scalar(1) : Scalar(-1);
        if (m % 2 == 0) {
            f += sign * term;
        } else {
            // m = 2n+1 carries (2n+1)!/t^{2n+2} = (2(n+1)-1)!/t^{2(n+1)}, index n+1 in g.
            g -= sign * term;
        }
        omitted = next;
        if (next >= term) break;
        term = next;
    }
    const Scalar half_pi = constants::pi<Scalar> / 2;
    return {half_pi - cos(t) * f + sin(t) * g, sin(t) * f + cos(t) * g, abs(omitted)};
}

}  // namespace plunge
