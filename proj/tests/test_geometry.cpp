#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "plunge/geometry.hpp"

using namespace plunge;

namespace {

Point pt(std::initializer_list<double> v) {
    Point p(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) p(i++) = x;
    return p;
}

BoxUnion l_shape() { return parse_box_union("0,2;0,1\n0,1;1,2\n"); }

/// Distance from x to the complement of a box union, from dense sampling of
/// the union's boundary (points on box faces that are not interior).
double sampled_complement_distance(const BoxUnion& u, const Point& x, int per_edge = 4000) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& b : u.boxes()) {
        for (int axis = 0; axis < 2; ++axis) {
            for (double fixed : {b.side(axis).lo, b.side(axis).hi}) {
                const auto& other = b.side(1 - axis);
                for (int k = 0; k <= per_edge; ++k) {
                    Point p(2);
                    p(axis) = fixed;
                    p(1 - axis) = other.lo + other.length() * k / per_edge;
                    // Skip points interior to the union (shared interfaces).
                    bool interior = true;
                    for (double dx : {-1e-9, 1e-9}) {
                        for (double dy : {-1e-9, 1e-9}) {
                            Point q = p;
                            q(0) += dx;
                            q(1) += dy;
                            interior = interior && u.contains(q);
                        }
                    }
                    if (!interior) best = std::min(best, (p - x).norm());
                }
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("intervals and boxes") {
    CHECK(Interval(1, 1).length() == 0.0);
    CHECK_THROWS_AS(Interval(2, 1), DomainError);
    CHECK_THROWS_AS(AxisBox({Interval(0, 0)}), DomainError);
    const AxisBox b{Interval(0, 2), Interval(0, 3)};
    CHECK(b.volume() == 6.0);
    CHECK(b.diameter() == doctest::Approx(std::sqrt(13.0)));
}

TEST_CASE("normalize_box_union") {
    SUBCASE("already disjoint") {
        const auto u = normalize_box_union({AxisBox{Interval(0, 1)}});
        REQUIRE(u.size() == 1);
        CHECK(u.volume() == 1.0);
    }
    SUBCASE("overlap in 1-D") {
        const auto u = normalize_box_union({AxisBox{Interval(0, 2)}, AxisBox{Interval(1, 3)}});
        CHECK(u.volume() == doctest::Approx(3.0));
        for (double x : {0.5, 1.5, 2.5}) CHECK(u.contains(pt({x})));
        CHECK_FALSE(u.contains(pt({3.5})));
    }
    SUBCASE("shared face only") {
        const auto u = normalize_box_union({AxisBox::cube(2, 0, 1), AxisBox{Interval(0, 1), Interval(1, 2)}});
        CHECK(u.size() == 2);
        CHECK(u.volume() == doctest::Approx(2.0));
    }
    SUBCASE("random overlapping rectangles keep the indicator") {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> U(0, 4);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<AxisBox> boxes;
            for (int k = 0; k < 4; ++k) {
                const double x0 = U(rng), y0 = U(rng);
                boxes.push_back(AxisBox{Interval(x0, x0 + 0.2 + U(rng) / 2), Interval(y0, y0 + 0.2 + U(rng) / 2)});
            }
            const auto u = normalize_box_union(boxes);
            // pairwise disjoint interiors
            for (std::size_t i = 0; i < u.size(); ++i) {
                for (std::size_t j = i + 1; j < u.size(); ++j) {
                    double ov = 1.0;
                    for (int a = 0; a < 2; ++a) ov *= overlap_length(u[i].side(a), u[j].side(a));
                    CHECK(ov <= 1e-12);
                }
            }
            for (int s = 0; s < 200; ++s) {
                const Point x = pt({U(rng) + 0.25, U(rng) + 0.25});
                bool in_any = false;
                for (const auto& b : boxes) in_any = in_any || b.contains(x);
                CHECK(u.contains(x) == in_any);
            }
        }
    }
    CHECK_THROWS_AS(normalize_box_union({AxisBox::cube(1, 0, 1), AxisBox::cube(2, 0, 1)}), DimensionMismatch);
}

TEST_CASE("box_union_sdf values") {
    const auto single = box_union_sdf(BoxUnion::from_disjoint({AxisBox{Interval(0, 2)}}));
    CHECK(single.sdf(pt({0.5})) == doctest::Approx(0.5));
    CHECK(single.sdf(pt({2.3})) == doctest::Approx(-0.3));
    const auto l = box_union_sdf(l_shape());
    CHECK(l.sdf(pt({0.5, 0.9})) >= 0.1);
    CHECK(l.sdf(pt({0.5, 0.9})) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(box_union_sdf(BoxUnion{}), EmptyRegion);
}

TEST_CASE("box_union_sdf is a lower bound on the sampled distance and 1-Lipschitz") {
    const auto u = l_shape();
    const auto region = box_union_sdf(u);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(0, 2);
    for (int i = 0; i < 40; ++i) {
        const Point x = pt({U(rng), U(rng)});
        if (!u.contains(x)) continue;
        const double brute = sampled_complement_distance(u, x);
        CHECK(region.sdf(x) <= brute + 1e-9);
        CHECK(region.sdf(x) >= brute - 1e-3);
    }
    std::mt19937_64 rng2(5);
    CHECK(lipschitz_excess(region, 2000, rng2) <= 1e-12);
    std::mt19937_64 rng3(5);
    CHECK(lipschitz_excess(ball_region(pt({0, 0}), 1.0), 2000, rng3) <= 1e-12);
}

TEST_CASE("face areas and the surface coefficient") {
    const auto unit1 = BoxUnion::from_disjoint({AxisBox{Interval(0, 1)}});
    CHECK(surface_coefficient(unit1, unit1) == doctest::Approx(1 / (M_PI * M_PI)));
    const auto sq = BoxUnion::from_disjoint({AxisBox::cube(2, 0, 1)});
    CHECK(surface_coefficient(sq, sq) == doctest::Approx(2 / (M_PI * M_PI)));
    const auto rect = BoxUnion::from_disjoint({AxisBox{Interval(0, 2), Interval(0, 1)}});
    CHECK(surface_coefficient(rect, sq) == doctest::Approx(3 / (M_PI * M_PI)));
    // Interior interface of two stacked squares does not count.
    const auto split = BoxUnion::from_disjoint({AxisBox::cube(2, 0, 1), AxisBox{Interval(1, 2), Interval(0, 1)}});
    CHECK(face_area(split, 0) == doctest::Approx(2.0));
    CHECK(face_area(split, 1) == doctest::Approx(4.0));
    // Symmetric under reflection, additive over separated components.
    const auto reflected = BoxUnion::from_disjoint({AxisBox{Interval(-2, 0), Interval(-1, 0)}});
    CHECK(surface_coefficient(reflected, sq) == doctest::Approx(surface_coefficient(rect, sq)));
    const auto two = BoxUnion::from_disjoint({AxisBox::cube(2, 0, 1), AxisBox{Interval(5, 7), Interval(0, 1)}});
    CHECK(surface_coefficient(two, sq) == doctest::Approx(surface_coefficient(sq, sq) + surface_coefficient(rect, sq)));
}

TEST_CASE("boundary cover") {
    const auto interval = box_region(AxisBox{Interval(0, 1)});
    for (double r : {1.0 / 64, 1.0 / 256}) CHECK(boundary_cover(interval, r) <= 8);
    const auto disk = ball_region(pt({0, 0}), 1.0);
    double hi = 0.0;
    for (int k = 4; k <= 10; ++k) {
        const double r = std::ldexp(1.0, -k);
        hi = std::max(hi, static_cast<double>(boundary_cover(disk, r)) * r);
    }
    CHECK(hi <= 2 * M_PI * 6);
    CHECK(boundary_cover(interval, 5.0) > 0);
    CHECK_THROWS_AS(boundary_cover(interval, 0.0), DomainError);
}

TEST_CASE("Minkowski content") {
    const auto interval = box_region(AxisBox{Interval(0, 1)});
    CHECK(minkowski_profile(interval, {1.0 / 64}).front().content == doctest::Approx(2.0).epsilon(0.02));
    const auto disk = ball_region(pt({0, 0}), 1.0);
    CHECK(minkowski_profile(disk, {1.0 / 256}).front().content == doctest::Approx(2 * M_PI).epsilon(0.05));
    const auto square = box_region(AxisBox::cube(2, 0, 1));
    CHECK(minkowski_profile(square, {1.0 / 128}).front().content == doctest::Approx(4.0).epsilon(0.05));
    CHECK_THROWS_AS(minkowski_profile(square, {0.1, 0.2}), DomainError);
}

TEST_CASE("box text format round-trips") {
    const auto u = parse_box_union("# L shape\n0,2;0,1\n\n0,1;1,2\n");
    REQUIRE(u.size() == 2);
    std::ostringstream out;
    write_box_union(out, u);
    const auto back = parse_box_union(out.str());
    REQUIRE(back.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (int a = 0; a < 2; ++a) {
            CHECK(back[i].side(a).lo == u[i].side(a).lo);
            CHECK(back[i].side(a).hi == u[i].side(a).hi);
        }
    }
    CHECK_THROWS_AS(parse_box_union("0;1\n"), ParseError);
    CHECK_THROWS_AS(parse_box_union("0,x\n"), ParseError);
    CHECK_THROWS_AS(parse_box_union("0,1\n0,1;0,1\n"), DimensionMismatch);
}
