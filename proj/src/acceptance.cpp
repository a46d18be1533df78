#include "plunge/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

#include "plunge/counting.hpp"
#include "plunge/geometry.hpp"
#include "plunge/quadrature.hpp"
#include "plunge/spectral1d.hpp"
#include "plunge/trace_squared.hpp"
#include "plunge/traces.hpp"
#include "plunge/whitney.hpp"

namespace plunge::acceptance {

namespace {

constexpr double kPi = constants::pi<double>;

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string num(double x, int digits = 4) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

template <typename Scalar>
Scalar loglog_slope(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    using std::log;
    Scalar mx = 0, my = 0;
    const auto n = static_cast<Scalar>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += log(x[i]);
        my += log(y[i]);
    }
    mx /= n;
    my /= n;
    Scalar sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (log(x[i]) - mx) * (log(y[i]) - my);
        sxx += (log(x[i]) - mx) * (log(x[i]) - mx);
    }
    return sxy / sxx;
}

// ---------------------------------------------------------------- oracles

double sinc2(double u) {
    if (std::abs(u) < 1e-8) return 1.0;
    const double s = std::sin(kPi * u) / (kPi * u);
    return s * s;
}

/// ∬_{[0,c]²} sinc²(x − y) dx dy by a tensor Gauss-Legendre rule.
double brute_trs2(double c) {
    const auto rule = composite_gauss_legendre(0.0, c, 0.25, 16);
    double total = 0.0;
    for (Eigen::Index i = 0; i < rule.size(); ++i) {
        double row = 0.0;
        for (Eigen::Index j = 0; j < rule.size(); ++j) row += rule.weights(j) * sinc2(rule.nodes(i) - rule.nodes(j));
        total += rule.weights(i) * row;
    }
    return total;
}

struct Segment {
    double ax, ay, bx, by;
};

double point_segment_distance(double x, double y, const Segment& s) {
    const double dx = s.bx - s.ax, dy = s.by - s.ay;
    double t = ((x - s.ax) * dx + (y - s.ay) * dy) / (dx * dx + dy * dy);
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(x - (s.ax + t * dx), y - (s.ay + t * dy));
}

/// Test shape with a hand-written boundary description.
struct Shape {
    std::string name;
    Region region;
    std::function<bool(const Point&)> inside;
    std::function<double(const Point&)> boundary_distance;
};

Shape unit_interval() {
    return {"[0,1]", box_region(AxisBox{Interval(0, 1)}), [](const Point& x) { return x(0) > 0 && x(0) < 1; },
            [](const Point& x) { return std::min(std::abs(x(0)), std::abs(1 - x(0))); }};
}

Shape polygon_shape(std::string name, Region region, std::function<bool(const Point&)> inside,
                    std::vector<std::pair<double, double>> vertices) {
    std::vector<Segment> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& a = vertices[i];
        const auto& b = vertices[(i + 1) % vertices.size()];
        edges.push_back({a.first, a.second, b.first, b.second});
    }
    auto dist = [edges](const Point& x) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& e : edges) best = std::min(best, point_segment_distance(x(0), x(1), e));
        return best;
    };
    return {std::move(name), std::move(region), std::move(inside), dist};
}

Shape unit_square() {
    return polygon_shape(
        "[0,1]^2", box_region(AxisBox::cube(2, 0, 1)),
        [](const Point& x) { return x(0) > 0 && x(0) < 1 && x(1) > 0 && x(1) < 1; },
        {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

Shape l_shape() {
    const auto u = BoxUnion::from_disjoint(
        {AxisBox{Interval(0, 1), Interval(0, 2)}, AxisBox{Interval(1, 2), Interval(0, 1)}});
    return polygon_shape(
        "L-shape", box_union_sdf(u),
        [](const Point& x) {
            const bool in_box = x(0) > 0 && x(0) < 2 && x(1) > 0 && x(1) < 2;
            return in_box && !(x(0) > 1 && x(1) > 1);
        },
        {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

/// Smallest boundary distance over a 9^d sample grid of the closed cube.
double sampled_cube_distance(const Shape& shape, const DyadicCube& q) {
    const int d = static_cast<int>(q.center.size());
    const int m = 9;
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> k(static_cast<std::size_t>(d), 0);
    Point x(d);
    while (true) {
        for (int i = 0; i < d; ++i) x(i) = q.center(i) + q.side * (static_cast<double>(k[i]) / (m - 1) - 0.5);
        best = std::min(best, shape.boundary_distance(x));
        int i = 0;
        while (i < d && ++k[i] == m) k[i++] = 0;
        if (i == d) break;
    }
    return best;
}

int floor_div2(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

std::vector<int> cube_key(int level, const Eigen::VectorXi& index) {
    std::vector<int> key{level};
    for (Eigen::Index i = 0; i < index.size(); ++i) key.push_back(index(i));
    return key;
}

struct WhitneyAudit {
    long long overlaps = 0;
    long long uncovered = 0;
    long long separation_failures = 0;
    long long certificate_failures = 0;
    double c3 = 0.0;
    std::size_t cubes = 0;
};

WhitneyAudit audit_whitney(const Shape& shape, int cutoff) {
    const auto w = whitney_decompose(shape.region, cutoff);
    WhitneyAudit audit;
    std::set<std::vector<int>> keys;
    auto record = [&](const DyadicCube& q) {
        if (!keys.insert(cube_key(q.level, q.index)).second) ++audit.overlaps;
    };
    for (const auto& q : w.interior_cubes) record(q);
    for (const auto& q : w.boundary_cells) record(q);
    audit.cubes = keys.size();

    // Dyadic cubes are nested or interior-disjoint, so overlap means a
    // strict ancestor is also present.
    auto check_ancestors = [&](const DyadicCube& q) {
        Eigen::VectorXi idx = q.index;
        for (int l = q.level - 1; l >= w.base_level; --l) {
            for (Eigen::Index i = 0; i < idx.size(); ++i) idx(i) = floor_div2(idx(i));
            if (keys.count(cube_key(l, idx))) ++audit.overlaps;
        }
    };
    for (const auto& q : w.interior_cubes) check_ancestors(q);
    for (const auto& q : w.boundary_cells) check_ancestors(q);

    for (const auto& q : w.interior_cubes) {
        const double diam = q.diameter();
        if (q.certified_dist < 2.0 * diam) ++audit.separation_failures;
        const double brute = sampled_cube_distance(shape, q);
        if (brute < q.certified_dist - 1e-12) ++audit.certificate_failures;
        audit.c3 = std::max(audit.c3, brute / diam);
    }

    // Coverage on a shifted sample grid over the bounding box.
    const int d = shape.region.dimension;
    const int per_axis = d == 1 ? 4001 : 241;
    std::vector<int> k(static_cast<std::size_t>(d), 0);
    Point x(d);
    Eigen::VectorXi idx(d);
    while (true) {
        for (int i = 0; i < d; ++i) {
            const auto& side = shape.region.bounds.side(i);
            x(i) = side.lo + side.length() * (k[i] + 0.5 + 0.1234 * (i + 1)) / (per_axis + 1);
        }
        if (shape.inside(x)) {
            bool found = false;
            for (int l = w.base_level; l <= w.cutoff && !found; ++l) {
                const double side = std::ldexp(1.0, -l);
                for (int i = 0; i < d; ++i) idx(i) = static_cast<int>(std::floor((x(i) - w.origin(i)) / side));
                found = keys.count(cube_key(l, idx)) > 0;
            }
            if (!found) ++audit.uncovered;
        }
        int i = 0;
        while (i < d && ++k[i] == per_axis) k[i++] = 0;
        if (i == d) break;
    }
    return audit;
}

// ----------------------------------------------------------------- checks

CheckResult trace_identity() {
    CheckResult r;
    r.limit = 1e-8;
    double worst_time = 0.0;
    std::ostringstream detail;
    for (double c : {1.0, 5.0, 10.0, 20.0}) {
        Stopwatch sw;
        const auto s = localization_spectrum(c);
        const double rel = std::abs(s.values.sum() - c) / c;
        worst_time = std::max(worst_time, sw.seconds());
        r.measured = std::max(r.measured, rel);
        detail << "c=" << c << ":" << num(rel, 2) << " ";
    }
    detail << "slowest=" << num(worst_time, 3) << "s";
    r.passed = r.measured <= r.limit && worst_time < 10.0;
    r.detail = detail.str();
    return r;
}

CheckResult trs2_cross_oracle() {
    CheckResult r;
    r.limit = 1e-6;
    Stopwatch sw;
    std::ostringstream detail;
    for (double c : {1.0, 5.0, 10.0}) {
        const double nystrom = localization_spectrum(c).values.squaredNorm();
        const double explicit_value = trs2_interval_explicit(c);
        const double w_path = trs2_box_union(BoxUnion::from_disjoint({AxisBox{Interval(0, c)}}),
                                             BoxUnion::from_disjoint({AxisBox{Interval(0, 1)}}))
                                  .value;
        const double brute = brute_trs2(c);
        const double v[] = {nystrom, explicit_value, w_path, brute};
        double gap = 0.0;
        for (double a : v) {
            for (double b : v) gap = std::max(gap, std::abs(a - b));
        }
        r.measured = std::max(r.measured, gap);
        detail << "c=" << c << ":" << num(explicit_value, 10) << " gap=" << num(gap, 2) << " ";
    }
    const double t = sw.seconds();
    detail << "total=" << num(t, 3) << "s";
    r.passed = r.measured <= r.limit && t < 60.0;
    r.detail = detail.str();
    return r;
}

CheckResult asymptotic_series() {
    CheckResult r;
    r.limit = 0.0;
    r.measured = -std::numeric_limits<double>::infinity();
    std::ostringstream detail;
    const std::vector<long double> cs{5.0L, 10.0L, 20.0L, 40.0L};
    for (int N = 1; N <= 3; ++N) {
        std::vector<long double> err;
        for (long double c : cs) err.push_back(std::abs(trs2_interval_explicit(c) - trs2_asymptotic(c, N)));
        const double slope = static_cast<double>(loglog_slope(cs, err));
        const double target = -(2.0 * N + 1.5);
        r.measured = std::max(r.measured, slope - target);
        detail << "N=" << N << " slope=" << num(slope, 4) << " (<= " << target << ") ";
    }
    r.passed = r.measured <= r.limit;
    r.detail = detail.str() + "[extended precision]";
    return r;
}

CheckResult slepian() {
    CheckResult r;
    r.limit = 0.0;
    r.measured = -std::numeric_limits<double>::infinity();
    std::ostringstream detail;
    for (double c : {10.0, 20.0, 40.0, 80.0}) {
        const auto s = localization_spectrum(c);
        const double half_gap = std::abs(static_cast<double>(count_above(s, 0.5)) - c);
        r.measured = std::max(r.measured, half_gap - (2.0 + std::log(c)));
        detail << "N_half(" << c << ")-c=" << half_gap << " ";
        if (c < 20.0) continue;
        for (double a : {0.2, 0.8}) {
            const double gap = std::abs(static_cast<double>(count_above(s, a)) - slepian_prediction(c, a));
            r.measured = std::max(r.measured, gap - (3.0 + std::log(c)));
        }
    }
    r.passed = r.measured <= r.limit;
    r.detail = detail.str() + "margin=" + num(r.measured, 3);
    return r;
}

CheckResult karnik() {
    CheckResult r;
    r.limit = 0.0;
    r.measured = -std::numeric_limits<double>::infinity();
    int violations = 0, cases = 0;
    for (double c : {5.0, 10.0, 20.0, 40.0}) {
        const auto s = localization_spectrum(c);
        for (int e = 1; e <= 8; ++e) {
            const double eps = std::pow(10.0, -e);
            if (!(eps > s.floor)) continue;
            const auto report = plunge_counts(s, eps);
            const double slack = static_cast<double>(report.Lambda) - karnik_bound(c, eps);
            r.measured = std::max(r.measured, slack);
            ++cases;
            if (slack > 0) ++violations;
        }
    }
    r.passed = violations == 0;
    r.detail = std::to_string(cases) + " cases, " + std::to_string(violations) + " violations, max(Lambda-bound)=" +
               num(r.measured, 3);
    return r;
}

CheckResult tensor_sandwich() {
    CheckResult r;
    r.limit = 0.0;
    int violations = 0, cases = 0;
    std::ostringstream detail;
    for (double c : {5.0, 10.0}) {
        const auto base = localization_spectrum(c);
        for (int d : {2, 3}) {
            for (double a : {0.3, 0.5, 0.7}) {
                const auto s = sandwich_check(base, d, a);
                ++cases;
                if (!s.lower_ok || !s.upper_ok) ++violations;
                if (c == 10.0 && d == 3 && a == 0.5) {
                    detail << "c=10,d=3,a=0.5: " << s.lower << "<=" << s.middle << "<=" << s.upper << " ";
                }
            }
        }
    }
    r.measured = violations;
    r.passed = violations == 0;
    r.detail = detail.str() + std::to_string(cases) + " cases";
    return r;
}

CheckResult jr_tail() {
    CheckResult r;
    r.limit = 1.1;
    std::ostringstream detail;
    for (double rr : {1.0, 2.0, 5.0, 20.0}) {
        const auto n = std::max<Eigen::Index>(200, static_cast<Eigen::Index>(40 * rr));
        const auto s = jr_singular_values(rr, n);
        for (int N = 0; N <= 12; ++N) {
            const Eigen::Index k = 2 * N + 2;
            // Values at or below the floor are only known to be <= floor.
            const double sigma = k < s.size() ? std::max(s.values(k), s.floor) : s.floor;
            const double ratio = (sigma + s.truncation_tail) / jr_rank2_tail_bound(N).bound;
            r.measured = std::max(r.measured, ratio);
        }
        detail << "r=" << rr << ":sigma_3=" << num(s.values(2), 4) << " ";
    }
    r.passed = r.measured <= r.limit;
    r.detail = detail.str() + "max (sigma+tail)/bound=" + num(r.measured, 3);
    return r;
}

CheckResult ir_decay() {
    CheckResult r;
    const double rr = 100.0;
    const auto s = ir_singular_values(rr, 1200);
    const auto start = static_cast<Eigen::Index>(std::ceil(10 * rr));
    r.limit = 1e-10;
    r.measured = s.values(1000);
    double beyond_max = 0.0;
    for (Eigen::Index i = start; i < s.size(); ++i) beyond_max = std::max(beyond_max, s.values(i));
    // Past 10r every value is below the numerical floor, so the exponential
    // rate is fitted on the resolved tail after the plunge instead.
    const auto fit_lo = static_cast<Eigen::Index>(std::ceil(1.2 * rr));
    const Eigen::Index fit_hi = s.trusted_count();
    double slope = std::numeric_limits<double>::quiet_NaN();
    if (fit_hi - fit_lo >= 3) {
        double mx = 0, my = 0;
        const double n = static_cast<double>(fit_hi - fit_lo);
        for (Eigen::Index i = fit_lo; i < fit_hi; ++i) {
            mx += static_cast<double>(i);
            my += std::log(s.values(i));
        }
        mx /= n;
        my /= n;
        double sxy = 0, sxx = 0;
        for (Eigen::Index i = fit_lo; i < fit_hi; ++i) {
            sxy += (static_cast<double>(i) - mx) * (std::log(s.values(i)) - my);
            sxx += (static_cast<double>(i) - mx) * (static_cast<double>(i) - mx);
        }
        slope = sxy / sxx;
    }
    r.passed = r.measured <= r.limit && beyond_max <= s.floor && slope < 0;
    r.detail = "max sigma beyond 10r=" + num(beyond_max, 3) + " (floor " + num(s.floor, 2) + "), slope of log sigma on [" +
               std::to_string(fit_lo) + "," + std::to_string(fit_hi) + ")=" + num(slope, 4);
    return r;
}

CheckResult schatten_count() {
    CheckResult r;
    r.limit = 1.0;
    std::vector<Spectrum> spectra;
    for (double c : {1.0, 5.0, 10.0, 20.0, 40.0}) spectra.push_back(localization_spectrum(c));
    spectra.push_back(product_spectrum(spectra[1], 2, default_product_floor(spectra[1])));
    spectra.push_back(jr_singular_values(2.0, 200));
    spectra.push_back(ir_singular_values(20.0, 200));
    for (const auto& s : spectra) {
        for (double delta : {0.3, 0.1, 0.01}) {
            const double p = 1.0 / (2.0 * std::log(1.0 / delta));
            const auto count = static_cast<double>((s.values.array() >= delta).count());
            const double bound = std::sqrt(std::exp(1.0)) * schatten_quasinorm(s, p);
            r.measured = std::max(r.measured, count / bound);
        }
    }
    r.passed = r.measured <= r.limit;
    r.detail = std::to_string(spectra.size()) + " spectra x 3 deltas, max count/(sqrt(e)||.||_p^p)=" + num(r.measured, 4);
    return r;
}

CheckResult whitney_invariants() {
    CheckResult r;
    r.limit = 2.0;
    Stopwatch sw;
    std::ostringstream detail;
    bool ok = true;
    for (const auto& shape : {unit_interval(), unit_square(), l_shape()}) {
        const auto a6 = audit_whitney(shape, 6);
        const auto a8 = audit_whitney(shape, 8);
        for (const auto* a : {&a6, &a8}) {
            ok = ok && a->overlaps == 0 && a->uncovered == 0 && a->separation_failures == 0 &&
                 a->certificate_failures == 0;
        }
        const double drift = std::max(a8.c3 / a6.c3, a6.c3 / a8.c3);
        r.measured = std::max(r.measured, drift);
        detail << shape.name << ": c3(6)=" << num(a6.c3, 4) << " c3(8)=" << num(a8.c3, 4) << " cubes=" << a8.cubes
               << " flaws=" << (a8.overlaps + a8.uncovered + a8.separation_failures + a8.certificate_failures) << "; ";
    }
    const double t = sw.seconds();
    detail << num(t, 3) << "s";
    r.passed = ok && r.measured <= r.limit && t < 30.0;
    r.detail = detail.str();
    return r;
}

CheckResult geometry_census() {
    CheckResult r;
    r.limit = 2.0;
    std::ostringstream detail;
    bool ok = true;
    struct Case {
        std::string name;
        Region region;
        double perimeter;
    };
    Point origin = Point::Zero(2);
    const Case cases[] = {{"disk", ball_region(origin, 1.0), 2 * kPi},
                          {"square", box_region(AxisBox::cube(2, 0, 1)), 4.0}};
    for (const auto& cs : cases) {
        const auto census = shell_census(whitney_decompose(cs.region, 11));
        const double shell_ratio = census.max_fitted(4, 10) / census.max_fitted(4, 7);
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (int k = 4; k <= 10; ++k) {
            const double rad = std::ldexp(1.0, -k);
            const double scaled = static_cast<double>(boundary_cover(cs.region, rad)) * rad;
            lo = std::min(lo, scaled);
            hi = std::max(hi, scaled);
        }
        const auto profile = minkowski_profile(cs.region, {1.0 / 32, 1.0 / 64, 1.0 / 128});
        const double mink_err = std::abs(profile.back().content - cs.perimeter) / cs.perimeter;
        ok = ok && shell_ratio <= 2.0 && hi / lo <= 2.0 && mink_err <= 0.05;
        r.measured = std::max({r.measured, shell_ratio, hi / lo});
        detail << cs.name << ": shell " << num(shell_ratio, 3) << ", cover " << num(hi / lo, 3) << ", minkowski "
               << num(profile.back().content, 5) << " (" << num(100 * mink_err, 2) << "%); ";
    }
    r.passed = ok;
    r.detail = detail.str();
    return r;
}

CheckResult area_law_slope() {
    CheckResult r;
    const auto h = functions::entropy();
    const double t40 = trace_function(localization_spectrum(40.0), h).value;
    const double t80 = trace_function(localization_spectrum(80.0), h).value;
    const double quotient = (t80 - t40) / std::log(2.0);
    r.measured = std::abs(quotient - 1.0 / 3.0) * 3.0;
    r.limit = 0.10;
    r.passed = r.measured <= r.limit;
    r.detail = "difference quotient=" + num(quotient, 6) + " (target 1/3)";
    return r;
}

CheckResult admissibility_classifier() {
    CheckResult r;
    const auto f = functions::inverse_log_power(1.5);
    const auto d1 = admissibility(f, 1);
    const auto d2 = admissibility(f, 2);
    int wrong = 0;
    if (d1.area_law.divergent) ++wrong;
    if (d1.trace_class.divergent) ++wrong;
    if (!d2.trace_class.divergent) ++wrong;
    r.measured = wrong;
    r.passed = wrong == 0;
    r.detail = "area law=" + num(d1.area_law.value, 6) + ", trace class d=1: " + num(d1.trace_class.value, 6) +
               ", d=2: " + (d2.trace_class.divergent ? std::string("divergent") : num(d2.trace_class.value, 6));
    return r;
}

CheckResult separated_union() {
    CheckResult r;
    const int k = 2;
    std::ostringstream detail;
    bool ok = true;
    double previous = std::numeric_limits<double>::infinity();
    double previous_err = 0.0;
    for (int N : {2, 4, 8, 16}) {
        const auto demo = separated_union_demo(N, k, Interval(0, 1));
        ok = ok && std::abs(demo.trace - std::ldexp(1.0, -k)) <= 1e-15;
        ok = ok && demo.trace_squared + demo.abs_error_bound < previous - previous_err;
        previous = demo.trace_squared;
        previous_err = demo.abs_error_bound;
        detail << "N=" << N << ":" << num(demo.trace_squared, 6) << " ";
    }
    r.measured = previous;
    r.passed = ok;
    r.detail = detail.str() + "Tr S=" + num(std::ldexp(1.0, -k));
    return r;
}

CheckResult envelope_stability() {
    CheckResult r;
    r.limit = 10.0;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    std::ostringstream detail;
    for (double c : {10.0, 20.0, 40.0, 80.0}) {
        const auto env = envelope_report(c, 1e-6, 1, localization_spectrum(c));
        const double ratio = env.at("lambda_ratio");
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        detail << "c=" << c << ":" << num(ratio, 4) << " ";
    }
    r.measured = hi / lo;
    r.passed = lo > 0 && r.measured <= r.limit;
    r.detail = detail.str();
    return r;
}

}  // namespace

const std::vector<Check>& checks() {
    static const std::vector<Check> list{
        {"1", "trace identity", trace_identity},
        {"2", "Tr S^2 cross-oracle", trs2_cross_oracle},
        {"3", "asymptotic series decay", asymptotic_series},
        {"4", "Slepian counts", slepian},
        {"5", "Karnik bound", karnik},
        {"6", "tensor sandwich", tensor_sandwich},
        {"7", "J_r tail bound", jr_tail},
        {"8", "I_r decay", ir_decay},
        {"9", "Schatten count inequality", schatten_count},
        {"10", "Whitney invariants", whitney_invariants},
        {"11", "geometry censuses", geometry_census},
        {"12", "enhanced area law slope", area_law_slope},
        {"13", "admissibility classifier", admissibility_classifier},
        {"14", "separated union demo", separated_union},
        {"E", "envelope ratio stability", envelope_stability},
    };
    return list;
}

std::vector<CheckResult> run_all(const std::function<void(const CheckResult&)>& on_result) {
    std::vector<CheckResult> out;
    for (const auto& check : checks()) {
        Stopwatch sw;
        CheckResult r;
        try {
            r = check.run();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.id = check.id;
        r.name = check.name;
        r.seconds = sw.seconds();
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_line(const CheckResult& r) {
    std::ostringstream line;
    line << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  measured=" << num(r.measured, 6)
         << " limit=" << num(r.limit, 6) << "  " << r.detail << "  (" << num(r.seconds, 3) << " s)";
    return line.str();
}

}  // namespace plunge::acceptance
