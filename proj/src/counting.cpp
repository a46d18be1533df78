#include "plunge/counting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace plunge {

namespace {

constexpr double kPi = constants::pi<double>;

Eigen::Index ipow(Eigen::Index base, int d) {
    Eigen::Index out = 1;
    for (int i = 0; i < d; ++i) out *= base;
    return out;
}

}  // namespace

double default_product_floor(const Spectrum& base) { return std::max(1e-12, std::sqrt(base.floor)); }

Spectrum product_spectrum(const Spectrum& base, int d, double floor) {
    if (!(floor > 0)) throw DomainError("product_spectrum: floor must be positive");
    if (d < 1) throw DomainError("product_spectrum: dimension must be at least 1");
    const Eigen::VectorXd v = base.trusted_values();
    std::vector<double> out;
    if (v.size() > 0) {
        const double top = v(0);
        std::vector<double> top_power(static_cast<std::size_t>(d) + 1, 1.0);
        for (int k = 1; k <= d; ++k) top_power[static_cast<std::size_t>(k)] = top_power[static_cast<std::size_t>(k) - 1] * top;
        // Depth-first over sorted factors; a branch is cut as soon as even
        // the largest completion cannot exceed the floor.
        std::function<void(int, double)> descend = [&](int depth, double partial) {
            const int remaining = d - depth - 1;
            for (Eigen::Index i = 0; i < v.size(); ++i) {
                const double p = partial * v(i);
                if (p * top_power[static_cast<std::size_t>(remaining)] <= floor) break;
                if (remaining == 0) {
                    out.push_back(p);
                } else {
                    descend(depth + 1, p);
                }
            }
        };
        descend(0, 1.0);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    Spectrum s;
    s.values = Eigen::Map<const Eigen::VectorXd>(out.data(), static_cast<Eigen::Index>(out.size()));
    s.descriptor = base.descriptor;
    s.descriptor.kind = d == 1 ? base.descriptor.kind : OperatorKind::product_d;
    s.descriptor.dimension = base.descriptor.dimension * d;
    s.descriptor.volume = std::pow(base.descriptor.volume, d);
    s.nodes = base.nodes;
    s.floor = floor;
    return s;
}

Eigen::Index count_above(const Spectrum& s, double eps) {
    if (!(eps > s.floor)) throw UntrustedThreshold("count_above: threshold at or below the spectrum floor");
    const auto* begin = s.values.data();
    const auto* end = begin + s.values.size();
    return std::partition_point(begin, end, [&](double v) { return v > eps; }) - begin;
}

double karnik_bound(double c, double eps) {
    if (!(c > 0)) throw DomainError("karnik_bound: c must be positive");
    if (!(eps > 0 && eps < 0.5)) throw DomainError("karnik_bound: need 0 < eps < 1/2");
    return 2.0 / (kPi * kPi) * std::log(50.0 * c + 25.0) * std::log(5.0 / (eps * (1.0 - eps))) + 7.0;
}

double slepian_prediction(double c, double a) {
    if (!(a > 0 && a < 1)) throw DomainError("slepian_prediction: need 0 < a < 1");
    if (!(c > 1)) throw DomainError("slepian_prediction: need c > 1");
    return c + std::log((1.0 - a) / a) * std::log(c) / (kPi * kPi);
}

CountingReport plunge_counts(const Spectrum& s, double eps) {
    if (!(eps > 0 && eps < 0.5)) throw DomainError("plunge_counts: need 0 < eps < 1/2");
    CountingReport r;
    r.c = s.descriptor.parameter;
    r.d = s.descriptor.dimension;
    r.eps = eps;
    r.N_eps = count_above(s, eps);
    r.N_half = count_above(s, 0.5);
    r.N_one_minus = count_above(s, 1.0 - eps);
    // Λ+ takes 1-ε inclusive so that N_{1-ε} = N_{1/2} - Λ+ holds exactly.
    r.Lambda_plus = r.N_half - r.N_one_minus;
    r.Lambda_minus = r.N_eps - r.N_half;
    r.Lambda = r.Lambda_plus + r.Lambda_minus;

    const double c = r.c;
    const double log_inv = std::log(1.0 / eps);
    if (r.d == 1) {
        r.predictions["karnik"] = karnik_bound(c, eps);
        if (c > 1) r.predictions["slepian"] = slepian_prediction(c, eps);
    }
    const double inner = 4.0 * c / log_inv;
    if (inner > 1.0) {
        r.predictions["two_cubes_upper"] = std::pow(c, r.d - 1) * log_inv * std::log(inner);
    }
    if (log_inv > std::exp(1.0) * c) {
        r.predictions["tiny_eps_equivalent"] = std::pow(log_inv / std::log(log_inv / c), r.d);
    }
    return r;
}

SandwichResult sandwich_check(const Spectrum& base, int d, double a) {
    if (!(a > 0 && a < 1)) throw DomainError("sandwich_check: need 0 < a < 1");
    const double root = std::pow(a, 1.0 / d);
    const auto product = product_spectrum(base, d, default_product_floor(base));
    SandwichResult r;
    r.lower = ipow(count_above(base, root), d);
    r.middle = count_above(product, a);
    r.upper = ipow(count_above(base, a), d);
    r.lower_ok = r.lower <= r.middle;
    r.upper_ok = r.middle <= r.upper;
    return r;
}

std::map<std::string, double> envelope_report(double c, double eps, int d, const Spectrum& s, double alpha) {
    const auto counts = plunge_counts(s, eps);
    std::map<std::string, double> out;
    const double log_inv = std::log(1.0 / eps);
    const double upper = std::pow(c, d - 1) * log_inv * std::log(alpha * c / log_inv);
    out["upper_envelope"] = upper;
    out["lambda_plus_ratio"] = static_cast<double>(counts.Lambda_plus) / upper;
    out["lambda_minus_ratio"] = static_cast<double>(counts.Lambda_minus) / upper;
    out["lambda_ratio"] = static_cast<double>(counts.Lambda) / upper;
    if (log_inv > std::exp(1.0) * c) {
        const double tiny = std::pow(log_inv / std::log(log_inv / c), d);
        out["tiny_envelope"] = tiny;
        out["tiny_lambda_minus_ratio"] = static_cast<double>(counts.Lambda_minus) / tiny;
    }
    return out;
}

}  // namespace plunge
