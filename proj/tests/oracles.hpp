#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's numerical kernels.

#include <Eigen/Eigenvalues>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace oracle {

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;
inline constexpr long double kGamma = 0.577215664901532860606512090082402431L;

/// Gauss-Legendre rule via Golub-Welsch (eigen-decomposition of the Jacobi matrix).
inline std::pair<std::vector<double>, std::vector<double>> golub_welsch(int n, double a, double b) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double beta = k / std::sqrt(4.0 * k * k - 1.0);
        J(k, k - 1) = J(k - 1, k) = beta;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    std::vector<double> x(n), w(n);
    for (int i = 0; i < n; ++i) {
        const double v = es.eigenvectors()(0, i);
        x[i] = 0.5 * (a + b) + 0.5 * (b - a) * es.eigenvalues()(i);
        w[i] = (b - a) * v * v;
    }
    return {x, w};
}

/// Composite Golub-Welsch rule with `panels` equal panels of `per_panel` nodes.
inline std::pair<std::vector<double>, std::vector<double>> composite_rule(double a, double b, int panels,
                                                                         int per_panel) {
    const auto unit = golub_welsch(per_panel, 0.0, 1.0);
    std::vector<double> x, w;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        for (int i = 0; i < per_panel; ++i) {
            x.push_back(a + h * (p + unit.first[i]));
            w.push_back(h * unit.second[i]);
        }
    }
    return {x, w};
}

/// Adaptive Simpson in extended precision.
inline long double simpson(const std::function<long double(long double)>& f, long double a, long double b,
                           long double tol, int depth = 50) {
    std::function<long double(long double, long double, long double, long double, long double, long double, int)>
        rec = [&](long double lo, long double hi, long double flo, long double fmid, long double fhi, long double whole,
                  int d) -> long double {
        const long double mid = (lo + hi) / 2;
        const long double lm = (lo + mid) / 2, rm = (mid + hi) / 2;
        const long double flm = f(lm), frm = f(rm);
        const long double left = (mid - lo) / 6 * (flo + 4 * flm + fmid);
        const long double right = (hi - mid) / 6 * (fmid + 4 * frm + fhi);
        if (d <= 0 || std::abs(left + right - whole) <= 15 * tol) return left + right + (left + right - whole) / 15;
        return rec(lo, mid, flo, flm, fmid, left, d - 1) + rec(mid, hi, fmid, frm, fhi, right, d - 1);
    };
    const long double fa = f(a), fb = f(b), fm = f((a + b) / 2);
    return rec(a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), depth);
}

/// Si(t) by its alternating Maclaurin series in extended precision.
inline long double si_series(long double t) {
    long double term = t;  // (-1)^k t^{2k+1} / (2k+1)!
    long double sum = 0;
    for (int k = 0; k < 200; ++k) {
        sum += term / (2 * k + 1);
        term *= -t * t / ((2 * k + 2) * (2 * k + 3));
        if (std::abs(term) < 1e-30L) break;
    }
    return sum;
}

/// Ci(t) = γ + log t + Σ (-1)^k t^{2k} / (2k (2k)!) in extended precision.
inline long double ci_series(long double t) {
    long double term = -t * t / 2;  // (-1)^k t^{2k} / (2k)!
    long double sum = 0;
    for (int k = 1; k < 200; ++k) {
        sum += term / (2 * k);
        term *= -t * t / ((2 * k + 1) * (2 * k + 2));
        if (std::abs(term) < 1e-30L) break;
    }
    return kGamma + std::log(t) + sum;
}

inline double sinc2(double u) {
    if (std::abs(u) < 1e-9) return 1.0;
    const double s = std::sin(M_PI * u) / (M_PI * u);
    return s * s;
}

/// ∬_{[0,a]×[0,a]} sinc²(x − y) dx dy by a tensor rule.
inline double trs2_brute(double a) {
    const int panels = std::max(1, static_cast<int>(std::ceil(a / 0.25)));
    const auto [x, w] = composite_rule(0.0, a, panels, 20);
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) row += w[j] * sinc2(x[i] - x[j]);
        total += w[i] * row;
    }
    return total;
}

/// Central difference with step h.
inline double derivative(const std::function<double(double)>& f, double t, double h = 1e-5) {
    return (f(t + h) - f(t - h)) / (2 * h);
}

}  // namespace oracle
