#include "plunge/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace plunge {

QuadratureRule<double> composite_gauss_legendre(double a, double b, double max_panel, Eigen::Index per_panel) {
    if (!(a < b)) throw DomainError("composite_gauss_legendre: need a < b");
    if (!(max_panel > 0)) throw DomainError("composite_gauss_legendre: panel width must be positive");
    const auto panels = static_cast<Eigen::Index>(std::max(1.0, std::ceil((b - a) / max_panel)));
    const auto unit = gauss_legendre<double>(per_panel, 0.0, 1.0);
    const double width = (b - a) / static_cast<double>(panels);
    QuadratureRule<double> rule;
    rule.nodes.resize(panels * per_panel);
    rule.weights.resize(panels * per_panel);
    for (Eigen::Index p = 0; p < panels; ++p) {
        const double lo = a + width * static_cast<double>(p);
        rule.nodes.segment(p * per_panel, per_panel) = (lo + width * unit.nodes.array()).matrix();
        rule.weights.segment(p * per_panel, per_panel) = width * unit.weights;
    }
    return rule;
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

QuadratureResult kronrod15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                                    double rel_tol, int max_depth) {
    if (a == b) return {};
    struct Segment {
        double a, b;
        int depth;
        QuadratureResult r;
        bool operator<(const Segment& o) const { return r.error < o.r.error; }
    };
    auto make = [&](double lo, double hi, int depth) {
        const auto r = kronrod15(f, lo, hi);
        if (!std::isfinite(r.value)) throw EvaluationError("integrate_adaptive: non-finite integrand");
        return Segment{lo, hi, depth, r};
    };
    // Bisect the worst segment until the total error meets the tolerance or the budget runs out.
    constexpr int kMaxSubdivisions = 2000;
    std::priority_queue<Segment> open;
    QuadratureResult settled;
    QuadratureResult total;
    auto push = [&](Segment s) {
        total.value += s.r.value;
        total.error += s.r.error;
        if (s.depth >= max_depth) {
            settled.value += s.r.value;
            settled.error += s.r.error;
        } else {
            open.push(s);
        }
    };
    push(make(a, b, 0));
    for (int it = 0; it < kMaxSubdivisions && !open.empty(); ++it) {
        if (total.error <= std::max(abs_tol, rel_tol * std::abs(total.value))) break;
        const Segment worst = open.top();
        open.pop();
        total.value -= worst.r.value;
        total.error -= worst.r.error;
        const double m = 0.5 * (worst.a + worst.b);
        push(make(worst.a, m, worst.depth + 1));
        push(make(m, worst.b, worst.depth + 1));
    }
    // Re-sum from the segments to avoid drift from the running updates.
    QuadratureResult out = settled;
    while (!open.empty()) {
        out.value += open.top().r.value;
        out.error += open.top().r.error;
        open.pop();
    }
    return out;
}

}  // namespace plunge
