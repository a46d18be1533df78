#include "plunge/traces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "plunge/quadrature.hpp"

namespace plunge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Uniform j / 2^level plus 2^{-k} and 1 - 2^{-k}; sorted and symmetric about 1/2.
std::vector<double> dyadic_grid(int level) {
    std::vector<double> g;
    const long long n = 1LL << level;
    for (long long j = 0; j <= n; ++j) g.push_back(static_cast<double>(j) / static_cast<double>(n));
    for (int k = level + 1; k <= 60; ++k) {
        g.push_back(std::ldexp(1.0, -k));
        g.push_back(1.0 - std::ldexp(1.0, -k));
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

struct SampledEnvelope {
    std::vector<double> grid;
    std::vector<double> prefix;  // sup_{x <= grid[i]} |f(x)|
    std::vector<double> suffix;  // sup_{x >= grid[i]} |f(1) - f(x)|

    SampledEnvelope(const std::function<double(double)>& f, int level) : grid(dyadic_grid(level)) {
        const double f1 = f(1.0);
        prefix.resize(grid.size());
        suffix.resize(grid.size());
        double run = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            run = std::max(run, std::abs(f(grid[i])));
            prefix[i] = run;
        }
        run = 0.0;
        for (std::size_t i = grid.size(); i-- > 0;) {
            run = std::max(run, std::abs(f1 - f(grid[i])));
            suffix[i] = run;
        }
    }

    // sup over samples x <= t
    double m0(double t) const {
        const auto it = std::upper_bound(grid.begin(), grid.end(), t);
        if (it == grid.begin()) return 0.0;
        return prefix[static_cast<std::size_t>(it - grid.begin()) - 1];
    }
    // sup over samples x >= 1 - t
    double m1(double t) const {
        const auto it = std::lower_bound(grid.begin(), grid.end(), 1.0 - t);
        if (it == grid.end()) return 0.0;
        return suffix[static_cast<std::size_t>(it - grid.begin())];
    }
};

// Sum of dyadic blocks [u0 2^k, u0 2^{k+1}] of a non-negative integrand on
// [u0, inf). Ten consecutive block ratios >= 0.99 count as divergence.
IntegralEstimate dyadic_block_integral(const std::function<double(double)>& phi, double u0) {
    IntegralEstimate out;
    double previous = 0.0;
    int slow = 0;
    double ratio = 1.0;
    for (int k = 0; k < 64; ++k) {
        const double lo = std::ldexp(u0, k);
        const double hi = 2.0 * lo;
        const auto block = integrate_adaptive(phi, lo, hi, 1e-300, 1e-10);
        out.value += block.value;
        out.error += block.error;
        if (!(block.value > 1e-300)) return out;
        if (k > 0) {
            ratio = block.value / previous;
            slow = ratio >= 0.99 ? slow + 1 : 0;
            if (slow >= 10) {
                out.divergent = true;
                out.value = kInf;
                return out;
            }
        }
        previous = block.value;
    }
    if (ratio < 1.0) {
        const double tail = previous * ratio / (1.0 - ratio);
        out.value += tail;
        out.error += tail;
    } else {
        out.error = kInf;
    }
    return out;
}

// ∫ over the dyadic panels [s 2^{-j-1}, s 2^{-j}] of g, j = 0, 1, ...
// (an endpoint singularity at 0), with geometric tail extrapolation.
IntegralEstimate endpoint_integral(const std::function<double(double)>& g, double s, double smallest) {
    IntegralEstimate out;
    double previous = 0.0;
    int slow = 0;
    int quiet = 0;
    double ratio = 0.5;
    for (int j = 0; j < 1100; ++j) {
        const double hi = std::ldexp(s, -j);
        const double lo = 0.5 * hi;
        if (lo < smallest) break;
        const auto panel = integrate_adaptive(g, lo, hi, 1e-300, 1e-12);
        out.value += panel.value;
        out.error += panel.error;
        if (j > 0 && previous != 0.0) {
            ratio = std::abs(panel.value / previous);
            slow = ratio >= 0.99 ? slow + 1 : 0;
            if (slow >= 10) {
                out.divergent = true;
                out.value = kInf;
                return out;
            }
        }
        previous = panel.value;
        quiet = std::abs(panel.value) <= 1e-17 * std::abs(out.value) ? quiet + 1 : 0;
        if (quiet >= 3) return out;
    }
    if (ratio < 1.0) {
        const double tail = previous * ratio / (1.0 - ratio);
        out.value += tail;
        out.error += std::abs(tail);
    }
    return out;
}

double finite_or_throw(double v) {
    if (!std::isfinite(v)) throw EvaluationError("spectral function returned a non-finite value");
    return v;
}

}  // namespace

double SpectralFunction::m0_at_log(double u) const {
    if (m0_log) return m0_log(u);
    return m0(std::exp(-u));
}

namespace functions {

SpectralFunction identity() {
    SpectralFunction f;
    f.name = "identity";
    f.evaluate = [](double t) { return t; };
    f.f1 = 1.0;
    f.m0 = [](double t) { return std::clamp(t, 0.0, 1.0); };
    f.m1 = [](double t) { return std::clamp(t, 0.0, 1.0); };
    f.m0_log = [](double u) { return std::exp(-u); };
    return f;
}

SpectralFunction zero() {
    SpectralFunction f;
    f.name = "zero";
    f.evaluate = [](double) { return 0.0; };
    f.m0 = [](double) { return 0.0; };
    f.m1 = [](double) { return 0.0; };
    return f;
}

SpectralFunction square() {
    SpectralFunction f;
    f.name = "square";
    f.evaluate = [](double t) { return t * t; };
    f.f1 = 1.0;
    f.m0 = [](double t) { return t * t; };
    f.m1 = [](double t) { return t * (2.0 - t); };
    f.m0_log = [](double u) { return std::exp(-2.0 * u); };
    return f;
}

SpectralFunction entropy() {
    auto h = [](double t) {
        if (t <= 0.0 || t >= 1.0) return 0.0;
        return -t * std::log(t) - (1.0 - t) * std::log1p(-t);
    };
    SpectralFunction f;
    f.name = "entropy";
    f.evaluate = h;
    f.f1 = 0.0;
    f.m0 = [h](double t) { return h(std::min(t, 0.5)); };
    f.m1 = [h](double t) { return h(std::min(t, 0.5)); };
    f.m0_log = [](double u) {
        const double t = std::exp(-u);
        return t * u - (1.0 - t) * std::log1p(-t);
    };
    return f;
}

SpectralFunction indicator_above(double a) {
    if (!(a > 0 && a < 1)) throw DomainError("indicator_above: need 0 < a < 1");
    SpectralFunction f;
    f.name = "indicator_above";
    f.evaluate = [a](double t) { return t > a ? 1.0 : 0.0; };
    f.f1 = 1.0;
    f.m0 = [a](double t) { return t > a ? 1.0 : 0.0; };
    f.m1 = [a](double t) { return 1.0 - t <= a ? 1.0 : 0.0; };
    f.m0_log = [a](double u) { return std::exp(-u) > a ? 1.0 : 0.0; };
    f.breakpoints = {a};
    return f;
}

SpectralFunction inverse_log_power(double alpha) {
    if (!(alpha > 0)) throw DomainError("inverse_log_power: alpha must be positive");
    auto g = [alpha](double t) { return t > 0.0 ? std::pow(std::log(2.0 / t), -alpha) : 0.0; };
    SpectralFunction f;
    f.name = "inverse_log_power";
    f.evaluate = g;
    f.f1 = g(1.0);
    f.m0 = g;  // increasing
    f.m1 = [g, f1 = g(1.0)](double t) { return f1 - g(1.0 - std::min(t, 1.0)); };
    f.m0_log = [alpha](double u) { return std::pow(std::log(2.0) + u, -alpha); };
    return f;
}

SpectralFunction scaled(const SpectralFunction& f, double s) {
    SpectralFunction g;
    g.name = f.name + "_scaled";
    g.evaluate = [e = f.evaluate, s](double t) { return s * e(t); };
    g.f1 = s * f.f1;
    g.m0 = [m = f.m0, a = std::abs(s)](double t) { return a * m(t); };
    g.m1 = [m = f.m1, a = std::abs(s)](double t) { return a * m(t); };
    if (f.m0_log) g.m0_log = [m = f.m0_log, a = std::abs(s)](double u) { return a * m(u); };
    g.breakpoints = f.breakpoints;
    return g;
}

SpectralFunction with_sampled_envelopes(std::string name, std::function<double(double)> fn) {
    auto env = std::make_shared<SampledEnvelope>(fn, 16);
    SpectralFunction f;
    f.name = std::move(name);
    f.f1 = fn(1.0);
    f.evaluate = std::move(fn);
    f.m0 = [env](double t) { return env->m0(t); };
    f.m1 = [env](double t) { return env->m1(t); };
    return f;
}

}  // namespace functions

double envelope_violation(const SpectralFunction& f, int points) {
    const int level = std::max(4, static_cast<int>(std::ceil(std::log2(static_cast<double>(points)))));
    const SampledEnvelope sampled(f.evaluate, level);
    double worst = -kInf;
    double last0 = 0.0;
    double last1 = 0.0;
    for (const double t : sampled.grid) {
        const double e0 = f.m0(t);
        const double e1 = f.m1(t);
        worst = std::max({worst, sampled.m0(t) - e0, sampled.m1(t) - e1, -e0, -e1, last0 - e0, last1 - e1});
        last0 = e0;
        last1 = e1;
    }
    return worst;
}

TraceValue trace_function(const Spectrum& s, const SpectralFunction& f) {
    TraceValue out;
    const Eigen::Index trusted = s.trusted_count();
    for (Eigen::Index i = 0; i < trusted; ++i) out.value += finite_or_throw(f(s.values(i)));
    out.tail_bound = f.m0(s.floor) * static_cast<double>(s.size() - trusted);
    return out;
}

double schatten_quasinorm(const Spectrum& s, double p) {
    if (!(p > 0) || !std::isfinite(p)) throw DomainError("schatten_quasinorm: need 0 < p < inf");
    return s.trusted_values().array().pow(p).sum();
}

IntegralEstimate plunge_integral(const SpectralFunction& f) {
    const double f1 = f.f1;
    auto g = [&](double t) { return finite_or_throw((f(t) - f1 * t) / (t * (1.0 - t))); };
    // Mirrored integrand on σ = 1 − θ keeps 1 − θ exact near the right end.
    auto g_right = [&](double s) {
        const double t = 1.0 - s;
        return finite_or_throw((f(t) - f1 * t) / (t * s));
    };
    std::vector<double> cuts{0.5};
    for (double b : f.breakpoints) {
        if (b > 0 && b < 1) cuts.push_back(b);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    IntegralEstimate out;
    const auto left = endpoint_integral(g, cuts.front(), 1e-300);
    const auto right = endpoint_integral(g_right, 1.0 - cuts.back(), 1e-13);
    out.divergent = left.divergent || right.divergent;
    out.value = left.value + right.value;
    out.error = left.error + right.error;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const auto piece = integrate_adaptive(g, cuts[i], cuts[i + 1], 1e-15, 1e-13);
        out.value += piece.value;
        out.error += piece.error;
    }
    if (out.divergent) out.value = kInf;
    return out;
}

double default_admissibility_delta() { return std::exp(-std::exp(1.0)); }

Admissibility admissibility(const SpectralFunction& f, int d, double delta) {
    if (d < 1) throw DomainError("admissibility: dimension must be at least 1");
    if (!(delta > 0 && delta <= default_admissibility_delta() * (1 + 1e-15))) {
        throw DomainError("admissibility: need 0 < delta <= e^{-e}");
    }
    Admissibility out;
    // ε = e^{-u}: dε/ε = du, so both integrals become ∫ ... du on [u0, ∞).
    auto trace_class = [&](double u) {
        return f.m0_at_log(u) * std::pow(u, d - 1) / std::pow(std::log(u), d);
    };
    out.trace_class = dyadic_block_integral(trace_class, std::log(1.0 / delta));

    auto area_small = [&](double u) { return f.m0_at_log(u) + f.m1(std::exp(-u)); };
    out.area_law = dyadic_block_integral(area_small, std::log(2.0));
    if (!out.area_law.divergent) {
        const auto upper = integrate_adaptive([&](double e) { return (f.m0(e) + f.m1(e)) / e; }, 0.5, 1.0, 1e-15, 1e-12);
        out.area_law.value += upper.value;
        out.area_law.error += upper.error;
    }
    return out;
}

TraceReport two_term_prediction(const SpectralFunction& f, const BoxUnion& a, const BoxUnion& b, double c,
                                std::optional<double> computed_trace) {
    if (a.dimension() != b.dimension()) throw DimensionMismatch("two_term_prediction: A and B differ in dimension");
    if (!(c > 0)) throw DomainError("two_term_prediction: c must be positive");
    const int d = a.dimension();
    TraceReport r;
    r.leading = std::pow(c, d) * a.volume() * b.volume() * f.f1;
    const auto plunge = plunge_integral(f);
    r.second = std::pow(c, d - 1) * std::log(c) * surface_coefficient(a, b) * plunge.value;
    const auto adm = admissibility(f, d);
    r.trace_class_integral = adm.trace_class.value;
    r.area_law_integral = adm.area_law.value;
    if (computed_trace) {
        r.trace = *computed_trace;
        r.residual = r.trace - r.leading - r.second;
    }
    return r;
}

}  // namespace plunge
