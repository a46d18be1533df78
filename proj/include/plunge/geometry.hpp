#pragma once

// Sets used as space and frequency domains: intervals, axis-parallel boxes,
// finite unions of boxes, and implicit regions given by a signed distance.

#include <Eigen/Core>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "plunge/errors.hpp"

namespace plunge {

using Point = Eigen::VectorXd;
using PointRef = Eigen::Ref<const Eigen::VectorXd>;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double lo_, double hi_);

    double length() const { return hi - lo; }
    double center() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

/// |I ∩ J| for closed intervals.
double overlap_length(const Interval& a, const Interval& b);

/// Axis-parallel box with positive side lengths.
class AxisBox {
public:
    AxisBox() = default;
    explicit AxisBox(std::vector<Interval> sides);
    AxisBox(std::initializer_list<Interval> sides) : AxisBox(std::vector<Interval>(sides)) {}

    /// [lo, hi]^d
    static AxisBox cube(int dimension, double lo, double hi);

    int dimension() const { return static_cast<int>(sides_.size()); }
    const Interval& side(int i) const { return sides_[static_cast<std::size_t>(i)]; }
    const std::vector<Interval>& sides() const { return sides_; }
    double volume() const;
    double diameter() const;
    bool contains(const PointRef& x) const;

    /// Signed distance: positive inside (distance to the complement),
    /// negative outside (minus the distance to the box).
    double signed_distance(const PointRef& x) const;

private:
    std::vector<Interval> sides_;
};

class BoxUnion {
public:
    BoxUnion() = default;
    /// Wraps boxes that are already known to have disjoint interiors.
    /// Use normalize_box_union for arbitrary input.
    static BoxUnion from_disjoint(std::vector<AxisBox> boxes);

    int dimension() const { return boxes_.empty() ? 0 : boxes_.front().dimension(); }
    bool empty() const { return boxes_.empty(); }
    std::size_t size() const { return boxes_.size(); }
    const std::vector<AxisBox>& boxes() const { return boxes_; }
    const AxisBox& operator[](std::size_t i) const { return boxes_[i]; }
    double volume() const;
    bool contains(const PointRef& x) const;
    AxisBox bounding_box() const;

private:
    std::vector<AxisBox> boxes_;
};

/// Splits overlapping boxes so the result has pairwise disjoint interiors and
/// the same indicator function. Earlier boxes are kept whole.
BoxUnion normalize_box_union(const std::vector<AxisBox>& boxes);

/// Implicit set {sdf > 0} inside a bounding box. The oracle must be
/// 1-Lipschitz and safe to call concurrently.
struct Region {
    int dimension = 0;
    AxisBox bounds;
    std::function<double(const PointRef&)> sdf;
};

Region box_region(const AxisBox& box);
Region ball_region(const Point& center, double radius);

/// Signed distance of a box union. Exact: the complement inside the bounding
/// box is enumerated as cells of the coordinate-compressed grid.
Region box_union_sdf(const BoxUnion& u);

/// Spot check of the Lipschitz bound on random point pairs in the (slightly
/// enlarged) bounding box. Returns the largest observed |Δsdf| - |Δx|.
double lipschitz_excess(const Region& region, int pairs, std::mt19937_64& rng);

/// Total (d-1)-area of the union's boundary faces with normal ±e_axis.
/// Interfaces shared by two boxes of the union do not count.
double face_area(const BoxUnion& u, int axis);

/// I(A, B) for axis-box unions: (1/4π²) Σ_i F_i(A) F_i(B).
double surface_coefficient(const BoxUnion& a, const BoxUnion& b);

/// Number of grid cells z + [0, r)^d, z ∈ rZ^d, whose centre lies within
/// r(1 + √d) of the boundary.
long long boundary_cover(const Region& region, double r);

struct MinkowskiSample {
    double r;
    double content;
};

/// Grid estimate of |{x : |sdf(x)| < r}| / 2r for each radius, grid step
/// r * step_factor (step_factor <= 1/4).
std::vector<MinkowskiSample> minkowski_profile(const Region& region, const std::vector<double>& radii,
                                               double step_factor = 0.25);

// Text format: one box per line, "lo1,hi1;lo2,hi2;...". Blank lines and
// lines starting with '#' are ignored.
std::vector<AxisBox> parse_boxes(std::istream& in);
BoxUnion parse_box_union(std::istream& in);
BoxUnion parse_box_union(const std::string& text);
void write_box_union(std::ostream& out, const BoxUnion& u);

}  // namespace plunge
