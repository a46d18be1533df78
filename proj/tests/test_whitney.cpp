#include <doctest.h>

#include <set>
#include <sstream>

#include "plunge/whitney.hpp"

using namespace plunge;

namespace {

Region l_region() { return box_union_sdf(parse_box_union("0,2;0,1\n0,1;1,2\n")); }

double interior_volume(const WhitneyDecomposition& w) {
    double v = 0.0;
    for (const auto& q : w.interior_cubes) v += std::pow(q.side, w.dimension);
    return v;
}

}  // namespace

TEST_CASE("interior cubes carry the separation certificate") {
    for (const auto& region : {box_region(AxisBox{Interval(0, 1)}), box_region(AxisBox::cube(2, 0, 1)), l_region()}) {
        const auto w = whitney_decompose(region, 7);
        REQUIRE_FALSE(w.interior_cubes.empty());
        for (const auto& q : w.interior_cubes) {
            CHECK(q.certified_dist >= 2 * q.diameter());
            CHECK(q.level < w.cutoff);
            CHECK(q.side == std::ldexp(1.0, -q.level));
        }
        for (const auto& q : w.boundary_cells) CHECK(q.level == w.cutoff);
    }
}

TEST_CASE("1-D cubes keep their distance from the endpoints") {
    const auto w = whitney_decompose(box_region(AxisBox{Interval(0, 1)}), 6);
    for (const auto& q : w.interior_cubes) {
        const double c = q.center(0);
        CHECK(std::min(c, 1 - c) >= 2 * q.side + q.side / 2 - 1e-15);
    }
}

TEST_CASE("interior volume of the unit square approaches 1") {
    double previous_gap = 1.0;
    for (int D : {5, 7, 9}) {
        const auto w = whitney_decompose(box_region(AxisBox::cube(2, 0, 1)), D);
        const double gap = 1.0 - interior_volume(w);
        CHECK(gap >= 0.0);
        CHECK(gap <= 40.0 * std::ldexp(1.0, -D));
        CHECK(gap < previous_gap);
        previous_gap = gap;
    }
}

TEST_CASE("no cube is contained in another") {
    const auto w = whitney_decompose(l_region(), 7);
    std::set<std::tuple<int, int, int>> keys;
    for (const auto* list : {&w.interior_cubes, &w.boundary_cells}) {
        for (const auto& q : *list) CHECK(keys.insert({q.level, q.index(0), q.index(1)}).second);
    }
    auto parent = [](int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); };
    for (const auto* list : {&w.interior_cubes, &w.boundary_cells}) {
        for (const auto& q : *list) {
            int i = q.index(0), j = q.index(1);
            for (int l = q.level - 1; l >= w.base_level; --l) {
                i = parent(i);
                j = parent(j);
                CHECK(keys.count({l, i, j}) == 0);
            }
        }
    }
}

TEST_CASE("shell census") {
    SUBCASE("interval has bounded counts per level") {
        const auto census = shell_census(whitney_decompose(box_region(AxisBox{Interval(0, 1)}), 12));
        for (const auto& [level, fitted] : census.fitted) CHECK(fitted <= 4.0);
        CHECK(census.count(census.counts.begin()->first - 1) == 0);
    }
    SUBCASE("disk and L-shape fitted constants are stable") {
        for (const auto& region : {ball_region(Point::Zero(2), 1.0), l_region()}) {
            const auto census = shell_census(whitney_decompose(region, 11));
            CHECK(census.max_fitted(4, 10) <= 2 * census.max_fitted(4, 7));
            CHECK(census.max_fitted(2, 10) < 100.0);
        }
    }
}

TEST_CASE("errors") {
    Region bad{1, AxisBox{Interval(0, 1)}, [](const PointRef&) { return std::nan(""); }};
    CHECK_THROWS_AS(whitney_decompose(bad, 4), OracleError);
    CHECK_THROWS_AS(whitney_decompose(box_region(AxisBox{Interval(0, 8)}), -5), DomainError);
}

TEST_CASE("CSV export") {
    const auto w = whitney_decompose(box_region(AxisBox::cube(2, 0, 1)), 4);
    std::ostringstream out;
    write_whitney_csv(out, w);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "level,x1,x2,side,certified_dist");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        CHECK(std::count(line.begin(), line.end(), ',') == 4);
        ++rows;
    }
    CHECK(rows == w.interior_cubes.size() + w.boundary_cells.size());
}
