#pragma once

// Trace functionals Tr f(S) of computed spectra and the two-term area-law
// prediction they are compared against.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plunge/geometry.hpp"
#include "plunge/spectral1d.hpp"

namespace plunge {

/// f : [0,1] -> R with f(0) = 0, together with its envelopes
///   M0(t) = sup_{0<=x<=t} |f(x)|,  M1(t) = sup_{1-t<=x<=1} |f(1) - f(x)|.
struct SpectralFunction {
    std::string name;
    std::function<double(double)> evaluate;
    double f1 = 0.0;
    std::function<double(double)> m0;
    std::function<double(double)> m1;
    /// Optional M0(e^{-u}) for large u, where e^{-u} underflows.
    std::function<double(double)> m0_log;
    /// Jump points in (0, 1); quadrature splits there.
    std::vector<double> breakpoints;

    double operator()(double theta) const { return evaluate(theta); }
    double m0_at_log(double u) const;
};

namespace functions {
SpectralFunction identity();
SpectralFunction zero();
SpectralFunction square();
/// −θ log θ − (1−θ) log(1−θ)
SpectralFunction entropy();
/// 1_{(a,1]}
SpectralFunction indicator_above(double a);
/// 1 / log(2/θ)^alpha
SpectralFunction inverse_log_power(double alpha);
/// s · f
SpectralFunction scaled(const SpectralFunction& f, double s);
/// Envelopes built by dense dyadic sampling (refined towards 0 and 1).
SpectralFunction with_sampled_envelopes(std::string name, std::function<double(double)> f);
}  // namespace functions

/// Largest violation of "envelope >= sampled sup" over a dyadic grid of
/// `points` samples; <= 0 means the envelopes are consistent.
double envelope_violation(const SpectralFunction& f, int points = 10000);

struct TraceValue {
    double value = 0.0;
    /// |contribution of untrusted values| <= tail_bound (reported, not added)
    double tail_bound = 0.0;
};

/// Σ f(λ_n) over trusted values.
TraceValue trace_function(const Spectrum& s, const SpectralFunction& f);

/// Σ σ_k^p over trusted values.
double schatten_quasinorm(const Spectrum& s, double p);

struct IntegralEstimate {
    double value = 0.0;
    double error = 0.0;
    bool divergent = false;
};

/// ∫_0^1 (f(θ) − f(1)θ) / (θ(1−θ)) dθ.
IntegralEstimate plunge_integral(const SpectralFunction& f);

struct Admissibility {
    IntegralEstimate trace_class;  ///< ∫_0^δ M0 f(ε) log(1/ε)^{d−1} / (ε (log log 1/ε)^d) dε
    IntegralEstimate area_law;     ///< ∫_0^1 (M0 f(ε) + M1 f(ε)) / ε dε
};

/// e^{-e}: the trace-class integrand needs log log(1/ε) > 0.
double default_admissibility_delta();

Admissibility admissibility(const SpectralFunction& f, int d, double delta = default_admissibility_delta());

struct TraceReport {
    double trace = std::numeric_limits<double>::quiet_NaN();
    double leading = 0.0;   ///< c^d |A||B| f(1)
    double second = 0.0;    ///< c^{d-1} log(c) I(A,B) ∫ (f − f(1)θ)/(θ(1−θ))
    double residual = std::numeric_limits<double>::quiet_NaN();
    double trace_class_integral = 0.0;
    double area_law_integral = 0.0;
};

TraceReport two_term_prediction(const SpectralFunction& f, const BoxUnion& a, const BoxUnion& b, double c,
                                std::optional<double> computed_trace = std::nullopt);

}  // namespace plunge
