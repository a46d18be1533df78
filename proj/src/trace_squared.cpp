#include "plunge/trace_squared.hpp"

#include <array>
#include <cmath>

#include "plunge/quadrature.hpp"

namespace plunge {

namespace {

constexpr double kPi = constants::pi<double>;
using Complex = std::complex<double>;

struct LinearPiece {
    double lo, hi;
    double gamma, delta;  // profile = gamma * z + delta on [lo, hi]
};

std::array<LinearPiece, 3> pieces(const OverlapProfile& p) {
    return {{{p.p1, p.p2, 1.0, -p.p1}, {p.p2, p.p3, 0.0, p.plateau}, {p.p3, p.p4, -1.0, p.p4}}};
}

const QuadratureRule<double>& unit_rule(int n) {
    static const auto fine = gauss_legendre<double>(16, 0.0, 1.0);
    static const auto coarse = gauss_legendre<double>(10, 0.0, 1.0);
    return n == 16 ? fine : coarse;
}

}  // namespace

double OverlapProfile::operator()(double z) const {
    if (z <= p1 || z >= p4) return 0.0;
    if (z < p2) return z - p1;
    if (z <= p3) return plateau;
    return p4 - z;
}

OverlapProfile overlap_profile(const Interval& i1, const Interval& i2) {
    OverlapProfile p;
    p.p1 = i2.lo - i1.hi;
    p.p4 = i2.hi - i1.lo;
    const double a = i2.lo - i1.lo;
    const double b = i2.hi - i1.hi;
    p.p2 = std::min(a, b);
    p.p3 = std::max(a, b);
    p.plateau = std::min(i1.length(), i2.length());
    return p;
}

Complex linear_fourier_piece(double gamma, double delta, double lo, double hi, double a) {
    if (!(hi > lo)) return {0.0, 0.0};
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    if (std::abs(a) * half <= 1.0) {
        // Centred Taylor series: ∫_{-h}^{h} (γ(m+s) + δ) e^{ias} ds, then shift by e^{iam}.
        const double base = gamma * mid + delta;
        Complex sum(0.0, 0.0);
        Complex power(1.0, 0.0);  // (ia)^k / k!
        double hpow = half;       // h^{k+1}
        for (int k = 0; k < 40; ++k) {
            Complex term;
            if (k % 2 == 0) {
                term = power * (base * 2.0 * hpow / (k + 1));
            } else {
                term = power * (gamma * 2.0 * hpow * half / (k + 2));
            }
            sum += term;
            const double bound = std::abs(power) * hpow * (std::abs(base) + std::abs(gamma) * half);
            if (k > 4 && bound <= 1e-18 * std::abs(sum)) break;
            power *= Complex(0.0, a) / static_cast<double>(k + 1);
            hpow *= half;
        }
        return sum * std::polar(1.0, a * mid);
    }
    const Complex ia(0.0, a);
    auto primitive = [&](double w) {
        const Complex e = std::polar(1.0, a * w);
        return (gamma * w + delta) * e / ia + gamma * e / (a * a);
    };
    return primitive(hi) - primitive(lo);
}

Complex profile_fourier(const OverlapProfile& profile, double z) {
    const double a = 2.0 * kPi * z;
    Complex g(0.0, 0.0);
    for (const auto& piece : pieces(profile)) g += linear_fourier_piece(piece.gamma, piece.delta, piece.lo, piece.hi, a);
    return g;
}

WValue w_integral(const Interval& i1, const Interval& i2, const Interval& j1, const Interval& j2) {
    const auto zp = overlap_profile(i1, i2);
    const auto wp = overlap_profile(j1, j2);
    if (zp.plateau <= 0.0 || wp.plateau <= 0.0) return {};
    // e^{2πizw} oscillates in z with frequency up to the w-support radius.
    const double max_panel = 0.25 / (1.0 + wp.support_radius());
    Complex fine(0.0, 0.0);
    Complex coarse(0.0, 0.0);
    for (const auto& piece : pieces(zp)) {
        if (!(piece.hi > piece.lo)) continue;
        const auto panels = static_cast<long>(std::ceil((piece.hi - piece.lo) / max_panel));
        const double width = (piece.hi - piece.lo) / static_cast<double>(panels);
        for (long p = 0; p < panels; ++p) {
            const double lo = piece.lo + width * static_cast<double>(p);
            for (int n : {16, 10}) {
                const auto& rule = unit_rule(n);
                Complex acc(0.0, 0.0);
                for (Eigen::Index q = 0; q < rule.size(); ++q) {
                    const double z = lo + width * rule.nodes(q);
                    acc += rule.weights(q) * (piece.gamma * z + piece.delta) * profile_fourier(wp, z);
                }
                (n == 16 ? fine : coarse) += width * acc;
            }
        }
    }
    // The coarse rule's discrepancy overestimates the fine rule's error;
    // the floor accounts for rounding in the accumulation.
    const double rounding = 1e-15 * zp.plateau * (zp.p4 - zp.p1) * wp.plateau * (wp.p4 - wp.p1);
    return {fine, std::abs(fine - coarse) + rounding};
}

Trs2Value trs2_box_union(const BoxUnion& a, const BoxUnion& b) {
    if (a.dimension() != b.dimension()) throw DimensionMismatch("trs2_box_union: A and B differ in dimension");
    const int d = a.dimension();
    Complex total(0.0, 0.0);
    double error = 0.0;
    // Fixed tuple order keeps the reduction bit-stable.
    for (std::size_t k1 = 0; k1 < a.size(); ++k1) {
        for (std::size_t k2 = 0; k2 < a.size(); ++k2) {
            for (std::size_t l1 = 0; l1 < b.size(); ++l1) {
                for (std::size_t l2 = 0; l2 < b.size(); ++l2) {
                    Complex product(1.0, 0.0);
                    double product_error = 0.0;
                    for (int i = 0; i < d; ++i) {
                        const auto w = w_integral(a[k1].side(i), a[k2].side(i), b[l1].side(i), b[l2].side(i));
                        product_error = product_error * std::abs(w.value) + std::abs(product) * w.abs_error_bound;
                        product *= w.value;
                    }
                    total += product;
                    error += product_error;
                }
            }
        }
    }
    Trs2Value out{total.real(), total.imag(), error};
    if (std::abs(out.imaginary_residue) > 1e-8 * std::max(1.0, std::abs(out.value))) {
        throw ConsistencyError("trs2_box_union: imaginary residue above tolerance");
    }
    return out;
}

double trs2_asymptotic_next_term(double c, int N) {
    const int n = N + 1;
    const double t = 2.0 * kPi * c;
    // log-factorials keep the ratio finite for large n
    const double log_f2n = std::lgamma(2.0 * n + 1.0);
    const double log_f2n_1 = std::lgamma(2.0 * n);
    const double log_f2n1 = std::lgamma(2.0 * n + 2.0);
    const double cos_term = (std::exp(log_f2n - 2.0 * n * std::log(t)) - std::exp(log_f2n_1 - 2.0 * n * std::log(t)));
    const double sin_term =
        (std::exp(log_f2n1 - (2.0 * n + 1) * std::log(t)) - std::exp(log_f2n - (2.0 * n + 1) * std::log(t)));
    return (std::abs(cos_term) + std::abs(sin_term)) / (kPi * kPi);
}

SeparatedUnionReport separated_union_demo(int N, int k, const Interval& b) {
    if (N < 2) throw DomainError("separated_union_demo: need N >= 2");
    if (k < 0) throw DomainError("separated_union_demo: need k >= 0");
    const double width = 1.0 / (static_cast<double>(N) * std::ldexp(1.0, k));
    std::vector<AxisBox> boxes;
    for (int m = 1; m <= N; ++m) {
        const double lo = static_cast<double>(N) * m;
        boxes.push_back(AxisBox{Interval(lo, lo + width)});
    }
    SeparatedUnionReport r;
    r.N = N;
    r.k = k;
    r.a = BoxUnion::from_disjoint(std::move(boxes));
    const auto bu = BoxUnion::from_disjoint({AxisBox{b}});
    r.trace = r.a.volume() * b.length();
    const auto t2 = trs2_box_union(r.a, bu);
    r.trace_squared = t2.value;
    r.abs_error_bound = t2.abs_error_bound;
    r.lambda1_bound = std::sqrt(std::max(0.0, t2.value));
    return r;
}

}  // namespace plunge
