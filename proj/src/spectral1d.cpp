#include "plunge/spectral1d.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace plunge {

namespace {

constexpr double kPi = constants::pi<double>;

// Sort descending and pull rounding-level excursions back into [lo, hi].
Eigen::Index sort_and_clip(Eigen::VectorXd& v, double lo, double hi, const char* who) {
    std::sort(v.data(), v.data() + v.size(), std::greater<>());
    Eigen::Index clipped = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) < lo - kClipSlack || v(i) > hi + kClipSlack || !std::isfinite(v(i))) {
            throw NumericError(std::string(who) + ": eigenvalue outside [0, 1] beyond rounding slack");
        }
        if (v(i) < lo || v(i) > hi) {
            v(i) = std::clamp(v(i), lo, hi);
            ++clipped;
        }
    }
    return clipped;
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m, const char* who) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError(std::string(who) + ": eigensolver did not converge");
    return solver.eigenvalues();
}

Eigen::VectorXd singular_values(const Eigen::MatrixXd& m, const char* who) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    if (svd.info() != Eigen::Success) throw NumericError(std::string(who) + ": SVD did not converge");
    return svd.singularValues();
}

Eigen::VectorXd concat(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    Eigen::VectorXd out(a.size() + b.size());
    out << a, b;
    return out;
}

// Symmetric [-R,-2r] ∪ [2r,R] composite rule (panel width 2, 16 nodes each).
QuadratureRule<double> two_sided_rule(double inner, double outer) {
    const auto right = composite_gauss_legendre(inner, outer, 2.0, 16);
    QuadratureRule<double> rule;
    const auto n = right.size();
    rule.nodes.resize(2 * n);
    rule.weights.resize(2 * n);
    rule.nodes.head(n) = -right.nodes.reverse();
    rule.weights.head(n) = right.weights.reverse();
    rule.nodes.tail(n) = right.nodes;
    rule.weights.tail(n) = right.weights;
    return rule;
}

Eigen::MatrixXd sinc_cross(const QuadratureRule<double>& rows, const QuadratureRule<double>& cols) {
    Eigen::MatrixXd k(rows.size(), cols.size());
    for (Eigen::Index j = 0; j < cols.size(); ++j) {
        for (Eigen::Index i = 0; i < rows.size(); ++i) k(i, j) = sinc_pi(rows.nodes(i) - cols.nodes(j));
    }
    return k;
}

}  // namespace

std::string to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::localization_1d: return "localization_1d";
        case OperatorKind::product_d: return "product_d";
        case OperatorKind::jr: return "Jr";
        case OperatorKind::ir: return "Ir";
    }
    return "unknown";
}

Eigen::Index Spectrum::trusted_count() const {
    // values are descending
    const auto* begin = values.data();
    const auto* end = begin + values.size();
    return std::partition_point(begin, end, [&](double v) { return v >= floor; }) - begin;
}

Eigen::Index required_nodes(double c) {
    return std::max<Eigen::Index>(64, static_cast<Eigen::Index>(std::ceil(4.0 * c)) + 60);
}

Spectrum localization_spectrum(double c, Eigen::Index n_nodes) {
    if (!(c > 0) || !std::isfinite(c)) throw DomainError("localization_spectrum: c must be positive");
    if (n_nodes < required_nodes(c)) {
        throw ResolutionError("localization_spectrum: need at least " + std::to_string(required_nodes(c)) + " nodes");
    }
    const auto rule = gauss_legendre<double>(n_nodes, 0.0, c);
    Spectrum s;
    s.values = symmetric_eigenvalues(sinc_nystrom_matrix(rule), "localization_spectrum");
    s.clipped = sort_and_clip(s.values, 0.0, 1.0, "localization_spectrum");
    s.descriptor = {OperatorKind::localization_1d, c, 1, c};
    s.nodes = n_nodes;
    s.floor = kLocalizationFloor;
    return s;
}

Spectrum localization_spectrum(double c) { return localization_spectrum(c, required_nodes(c)); }

Spectrum localization_spectrum_scaled(double a, double b, Eigen::Index n_nodes) {
    if (!(a > 0) || !(b > 0)) throw DomainError("localization_spectrum_scaled: a and b must be positive");
    if (n_nodes < required_nodes(a * b)) throw ResolutionError("localization_spectrum_scaled: too few nodes");
    const auto rule = gauss_legendre<double>(n_nodes, 0.0, a);
    Spectrum s;
    s.values = symmetric_eigenvalues(sinc_nystrom_matrix(rule, b), "localization_spectrum_scaled");
    s.clipped = sort_and_clip(s.values, 0.0, 1.0, "localization_spectrum_scaled");
    s.descriptor = {OperatorKind::localization_1d, a * b, 1, a * b};
    s.nodes = n_nodes;
    s.floor = kLocalizationFloor;
    return s;
}

double jr_truncation_tail(double r, double R) {
    if (!(R > 2 * r)) throw DomainError("jr_truncation_tail: need R > 2r");
    return std::sqrt(2.0 * r * (2.0 / (kPi * kPi)) / (R - r));
}

Spectrum jr_singular_values(double r, double R, Eigen::Index n_nodes) {
    if (!(r > 0)) throw DomainError("jr_singular_values: r must be positive");
    if (!(R > 2 * r)) throw DomainError("jr_singular_values: need R > 2r");
    if (n_nodes < 64) throw ResolutionError("jr_singular_values: need at least 64 nodes");
    const auto y = gauss_legendre<double>(std::max(n_nodes, required_nodes(2 * r)), -r, r);
    const auto x = two_sided_rule(2 * r, R);
    Eigen::MatrixXd k = sinc_cross(x, y);
    k = x.weights.array().sqrt().matrix().asDiagonal() * k * y.weights.array().sqrt().matrix().asDiagonal();
    Spectrum s;
    s.values = singular_values(k, "jr_singular_values");
    s.descriptor = {OperatorKind::jr, r, 1, std::numeric_limits<double>::quiet_NaN()};
    s.nodes = y.size();
    s.floor = 1e-13;
    s.truncation_tail = jr_truncation_tail(r, R);
    return s;
}

Spectrum jr_singular_values(double r, Eigen::Index n_nodes) {
    if (!(r > 0)) throw DomainError("jr_singular_values: r must be positive");
    if (n_nodes < 64) throw ResolutionError("jr_singular_values: need at least 64 nodes");
    const auto y = gauss_legendre<double>(std::max(n_nodes, required_nodes(2 * r)), -r, r);
    const auto inner = composite_gauss_legendre(-2 * r, 2 * r, 1.0, 16);
    const Eigen::MatrixXd kyy = sinc_cross(y, y);
    const Eigen::MatrixXd kxy = sinc_cross(inner, y);
    Eigen::MatrixXd gram = kyy - kxy.transpose() * inner.weights.asDiagonal() * kxy;
    const Eigen::VectorXd root = y.weights.array().sqrt();
    gram = root.asDiagonal() * gram * root.asDiagonal();
    gram = 0.5 * (gram + gram.transpose()).eval();
    Eigen::VectorXd mu = symmetric_eigenvalues(gram, "jr_singular_values");
    Spectrum s;
    s.values = mu.cwiseMax(0.0).cwiseSqrt();
    std::sort(s.values.data(), s.values.data() + s.values.size(), std::greater<>());
    s.descriptor = {OperatorKind::jr, r, 1, std::numeric_limits<double>::quiet_NaN()};
    s.nodes = y.size();
    // Eigenvalues of the Gram matrix carry ~1e-14 absolute error, so singular
    // values below its square root are noise.
    s.floor = 1e-7;
    return s;
}

Rank2TailBound jr_rank2_tail_bound(int N) {
    if (N < 0) throw DomainError("jr_rank2_tail_bound: N must be non-negative");
    const double lead = std::sqrt(2.0) / kPi;
    double sum = 0.0;
    for (int n = N + 1; n < N + 200; ++n) sum += std::ldexp(1.0, -n) / (2.0 * n + 1.0);
    return {lead * std::ldexp(1.0, -N), lead * sum};
}

Spectrum ir_singular_values(double r, Eigen::Index n_nodes) {
    if (!(r > 0)) throw DomainError("ir_singular_values: r must be positive");
    if (n_nodes < required_nodes(r)) {
        throw ResolutionError("ir_singular_values: need at least " + std::to_string(required_nodes(r)) + " nodes");
    }
    // Shift to A = [-r/2, r/2], B = [-1/2, 1/2]; even and odd functions map to
    // even and odd transforms with kernels 2cos(2πxξ) and 2sin(2πxξ) on the
    // half-lines.
    const Eigen::Index half = (n_nodes + 1) / 2;
    const auto x = gauss_legendre<double>(half, 0.0, 0.5 * r);
    const auto xi = gauss_legendre<double>(half, 0.0, 0.5);
    const Eigen::VectorXd wx = x.weights.array().sqrt();
    const Eigen::VectorXd wxi = xi.weights.array().sqrt();
    Eigen::MatrixXd even(half, half), odd(half, half);
    for (Eigen::Index j = 0; j < half; ++j) {
        for (Eigen::Index i = 0; i < half; ++i) {
            const double phase = 2.0 * kPi * xi.nodes(i) * x.nodes(j);
            even(i, j) = 2.0 * wxi(i) * std::cos(phase) * wx(j);
            odd(i, j) = 2.0 * wxi(i) * std::sin(phase) * wx(j);
        }
    }
    Spectrum s;
    s.values = concat(singular_values(even, "ir_singular_values"), singular_values(odd, "ir_singular_values"));
    s.clipped = sort_and_clip(s.values, 0.0, 1.0, "ir_singular_values");
    s.descriptor = {OperatorKind::ir, r, 1, r};
    s.nodes = 2 * half;
    s.floor = kLocalizationFloor;
    return s;
}

}  // namespace plunge
