#include "plunge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace plunge {

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo_ <= hi_)) throw DomainError("Interval: need lo <= hi");
}

double overlap_length(const Interval& a, const Interval& b) {
    return std::max(0.0, std::min(a.hi, b.hi) - std::max(a.lo, b.lo));
}

AxisBox::AxisBox(std::vector<Interval> sides) : sides_(std::move(sides)) {
    if (sides_.empty()) throw DomainError("AxisBox: dimension must be at least 1");
    for (const auto& s : sides_) {
        if (!(s.length() > 0)) throw DomainError("AxisBox: degenerate side (zero length)");
        if (!std::isfinite(s.lo) || !std::isfinite(s.hi)) throw DomainError("AxisBox: non-finite side");
    }
}

AxisBox AxisBox::cube(int dimension, double lo, double hi) {
    return AxisBox(std::vector<Interval>(static_cast<std::size_t>(dimension), Interval(lo, hi)));
}

double AxisBox::volume() const {
    double v = 1.0;
    for (const auto& s : sides_) v *= s.length();
    return v;
}

double AxisBox::diameter() const {
    double d2 = 0.0;
    for (const auto& s : sides_) d2 += s.length() * s.length();
    return std::sqrt(d2);
}

bool AxisBox::contains(const PointRef& x) const {
    for (int i = 0; i < dimension(); ++i) {
        if (!side(i).contains(x(i))) return false;
    }
    return true;
}

double AxisBox::signed_distance(const PointRef& x) const {
    double inside = std::numeric_limits<double>::infinity();
    double outside2 = 0.0;
    bool in = true;
    for (int i = 0; i < dimension(); ++i) {
        const auto& s = side(i);
        const double below = s.lo - x(i);
        const double above = x(i) - s.hi;
        const double excess = std::max(below, above);
        if (excess > 0) {
            in = false;
            outside2 += excess * excess;
        } else {
            inside = std::min(inside, -excess);
        }
    }
    return in ? inside : -std::sqrt(outside2);
}

BoxUnion BoxUnion::from_disjoint(std::vector<AxisBox> boxes) {
    BoxUnion u;
    for (const auto& b : boxes) {
        if (b.dimension() != boxes.front().dimension()) throw DimensionMismatch("BoxUnion: mixed dimensions");
    }
    u.boxes_ = std::move(boxes);
    return u;
}

double BoxUnion::volume() const {
    double v = 0.0;
    for (const auto& b : boxes_) v += b.volume();
    return v;
}

bool BoxUnion::contains(const PointRef& x) const {
    return std::any_of(boxes_.begin(), boxes_.end(), [&](const AxisBox& b) { return b.contains(x); });
}

AxisBox BoxUnion::bounding_box() const {
    if (boxes_.empty()) throw EmptyRegion("BoxUnion: empty union has no bounding box");
    std::vector<Interval> sides = boxes_.front().sides();
    for (const auto& b : boxes_) {
        for (int i = 0; i < b.dimension(); ++i) {
            auto& s = sides[static_cast<std::size_t>(i)];
            s = Interval(std::min(s.lo, b.side(i).lo), std::max(s.hi, b.side(i).hi));
        }
    }
    return AxisBox(std::move(sides));
}

namespace {

bool interiors_overlap(const AxisBox& a, const AxisBox& b) {
    for (int i = 0; i < a.dimension(); ++i) {
        if (!(std::max(a.side(i).lo, b.side(i).lo) < std::min(a.side(i).hi, b.side(i).hi))) return false;
    }
    return true;
}

// a \ b as boxes with disjoint interiors.
std::vector<AxisBox> subtract(const AxisBox& a, const AxisBox& b) {
    if (!interiors_overlap(a, b)) return {a};
    std::vector<AxisBox> pieces;
    std::vector<Interval> rest = a.sides();
    for (int i = 0; i < a.dimension(); ++i) {
        auto& s = rest[static_cast<std::size_t>(i)];
        const auto& cut = b.side(i);
        if (s.lo < cut.lo) {
            auto piece = rest;
            piece[static_cast<std::size_t>(i)] = Interval(s.lo, cut.lo);
            pieces.emplace_back(std::move(piece));
            s.lo = cut.lo;
        }
        if (s.hi > cut.hi) {
            auto piece = rest;
            piece[static_cast<std::size_t>(i)] = Interval(cut.hi, s.hi);
            pieces.emplace_back(std::move(piece));
            s.hi = cut.hi;
        }
    }
    return pieces;
}

double point_box_distance(const PointRef& x, const AxisBox& box) {
    double d2 = 0.0;
    for (int i = 0; i < box.dimension(); ++i) {
        const double e = std::max({box.side(i).lo - x(i), x(i) - box.side(i).hi, 0.0});
        d2 += e * e;
    }
    return std::sqrt(d2);
}

// Coordinate-compressed grid of a box union: every cell is either fully
// inside or fully outside the union.
struct CompressedGrid {
    int dimension = 0;
    std::vector<std::vector<double>> cuts;  // per axis, sorted unique
    std::vector<Eigen::Index> extent;       // cells per axis
    std::vector<char> inside;               // row-major over extent

    explicit CompressedGrid(const BoxUnion& u) : dimension(u.dimension()) {
        cuts.resize(static_cast<std::size_t>(dimension));
        for (const auto& b : u.boxes()) {
            for (int i = 0; i < dimension; ++i) {
                cuts[static_cast<std::size_t>(i)].push_back(b.side(i).lo);
                cuts[static_cast<std::size_t>(i)].push_back(b.side(i).hi);
            }
        }
        Eigen::Index total = 1;
        for (auto& c : cuts) {
            std::sort(c.begin(), c.end());
            c.erase(std::unique(c.begin(), c.end()), c.end());
            extent.push_back(static_cast<Eigen::Index>(c.size()) - 1);
            total *= extent.back();
        }
        inside.assign(static_cast<std::size_t>(total), 0);
        std::vector<Eigen::Index> idx(static_cast<std::size_t>(dimension), 0);
        Point centre(dimension);
        for (Eigen::Index flat = 0; flat < total; ++flat) {
            unflatten(flat, idx);
            for (int i = 0; i < dimension; ++i) {
                const auto& c = cuts[static_cast<std::size_t>(i)];
                const auto k = static_cast<std::size_t>(idx[static_cast<std::size_t>(i)]);
                centre(i) = 0.5 * (c[k] + c[k + 1]);
            }
            inside[static_cast<std::size_t>(flat)] = u.contains(centre) ? 1 : 0;
        }
    }

    Eigen::Index cell_count() const { return static_cast<Eigen::Index>(inside.size()); }

    void unflatten(Eigen::Index flat, std::vector<Eigen::Index>& idx) const {
        for (int i = dimension - 1; i >= 0; --i) {
            const auto e = extent[static_cast<std::size_t>(i)];
            idx[static_cast<std::size_t>(i)] = flat % e;
            flat /= e;
        }
    }

    Eigen::Index flatten(const std::vector<Eigen::Index>& idx) const {
        Eigen::Index flat = 0;
        for (int i = 0; i < dimension; ++i) flat = flat * extent[static_cast<std::size_t>(i)] + idx[static_cast<std::size_t>(i)];
        return flat;
    }

    AxisBox cell(const std::vector<Eigen::Index>& idx) const {
        std::vector<Interval> sides;
        for (int i = 0; i < dimension; ++i) {
            const auto& c = cuts[static_cast<std::size_t>(i)];
            const auto k = static_cast<std::size_t>(idx[static_cast<std::size_t>(i)]);
            sides.emplace_back(c[k], c[k + 1]);
        }
        return AxisBox(std::move(sides));
    }
};

}  // namespace

BoxUnion normalize_box_union(const std::vector<AxisBox>& boxes) {
    std::vector<AxisBox> result;
    for (const auto& box : boxes) {
        if (box.dimension() != boxes.front().dimension()) {
            throw DimensionMismatch("normalize_box_union: boxes of different dimensions");
        }
        std::vector<AxisBox> fragments{box};
        for (const auto& kept : result) {
            std::vector<AxisBox> next;
            for (const auto& f : fragments) {
                auto pieces = subtract(f, kept);
                next.insert(next.end(), pieces.begin(), pieces.end());
            }
            fragments = std::move(next);
        }
        result.insert(result.end(), fragments.begin(), fragments.end());
    }
    return BoxUnion::from_disjoint(std::move(result));
}

Region box_region(const AxisBox& box) {
    return Region{box.dimension(), box, [box](const PointRef& x) { return box.signed_distance(x); }};
}

Region ball_region(const Point& center, double radius) {
    if (!(radius > 0)) throw DomainError("ball_region: radius must be positive");
    std::vector<Interval> sides;
    for (Eigen::Index i = 0; i < center.size(); ++i) sides.emplace_back(center(i) - radius, center(i) + radius);
    return Region{static_cast<int>(center.size()), AxisBox(std::move(sides)),
                  [center, radius](const PointRef& x) { return radius - (x - center).norm(); }};
}

Region box_union_sdf(const BoxUnion& u) {
    if (u.empty()) throw EmptyRegion("box_union_sdf: empty union");
    const AxisBox bounds = u.bounding_box();
    const CompressedGrid grid(u);
    std::vector<AxisBox> holes;
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(grid.dimension));
    for (Eigen::Index flat = 0; flat < grid.cell_count(); ++flat) {
        if (grid.inside[static_cast<std::size_t>(flat)]) continue;
        grid.unflatten(flat, idx);
        holes.push_back(grid.cell(idx));
    }
    auto sdf = [u, bounds, holes = std::move(holes)](const PointRef& x) {
        if (!u.contains(x)) {
            double d = std::numeric_limits<double>::infinity();
            for (const auto& b : u.boxes()) d = std::min(d, point_box_distance(x, b));
            return -d;
        }
        double d = bounds.signed_distance(x);
        for (const auto& h : holes) d = std::min(d, point_box_distance(x, h));
        return d;
    };
    return Region{u.dimension(), bounds, std::move(sdf)};
}

double lipschitz_excess(const Region& region, int pairs, std::mt19937_64& rng) {
    const int d = region.dimension;
    std::vector<std::uniform_real_distribution<double>> axis;
    for (int i = 0; i < d; ++i) {
        const auto& s = region.bounds.side(i);
        const double pad = 0.1 * s.length();
        axis.emplace_back(s.lo - pad, s.hi + pad);
    }
    double worst = -std::numeric_limits<double>::infinity();
    Point x(d), y(d);
    for (int p = 0; p < pairs; ++p) {
        for (int i = 0; i < d; ++i) {
            x(i) = axis[static_cast<std::size_t>(i)](rng);
            y(i) = axis[static_cast<std::size_t>(i)](rng);
        }
        worst = std::max(worst, std::abs(region.sdf(x) - region.sdf(y)) - (x - y).norm());
    }
    return worst;
}

double face_area(const BoxUnion& u, int axis) {
    if (u.empty()) return 0.0;
    if (axis < 0 || axis >= u.dimension()) throw DomainError("face_area: axis out of range");
    const CompressedGrid grid(u);
    const auto d = static_cast<std::size_t>(grid.dimension);
    std::vector<Eigen::Index> idx(d);
    double area = 0.0;
    for (Eigen::Index flat = 0; flat < grid.cell_count(); ++flat) {
        if (!grid.inside[static_cast<std::size_t>(flat)]) continue;
        grid.unflatten(flat, idx);
        double face = 1.0;
        for (std::size_t i = 0; i < d; ++i) {
            if (static_cast<int>(i) == axis) continue;
            const auto& c = grid.cuts[i];
            face *= c[static_cast<std::size_t>(idx[i]) + 1] - c[static_cast<std::size_t>(idx[i])];
        }
        const auto a = static_cast<std::size_t>(axis);
        for (int step : {-1, 1}) {
            auto nb = idx;
            nb[a] += step;
            const bool neighbour_inside = nb[a] >= 0 && nb[a] < grid.extent[a] &&
                                          grid.inside[static_cast<std::size_t>(grid.flatten(nb))];
            if (!neighbour_inside) area += face;
        }
    }
    return area;
}

double surface_coefficient(const BoxUnion& a, const BoxUnion& b) {
    if (a.dimension() != b.dimension()) throw DimensionMismatch("surface_coefficient: A and B differ in dimension");
    const double pi = 3.14159265358979323846;
    double sum = 0.0;
    for (int i = 0; i < a.dimension(); ++i) sum += face_area(a, i) * face_area(b, i);
    return sum / (4.0 * pi * pi);
}

namespace {

// Calls visit(point) for every cell centre of the grid origin + step*(k + 1/2)
// covering [lo, hi] per axis.
template <typename Visit>
void for_each_grid_centre(const Point& lo, const Point& hi, double step, Visit&& visit) {
    const auto d = lo.size();
    Eigen::VectorXi first(d), count(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        first(i) = static_cast<int>(std::floor(lo(i) / step));
        count(i) = static_cast<int>(std::ceil(hi(i) / step)) - first(i);
    }
    Eigen::VectorXi k = Eigen::VectorXi::Zero(d);
    Point x(d);
    while (true) {
        for (Eigen::Index i = 0; i < d; ++i) x(i) = (first(i) + k(i) + 0.5) * step;
        visit(x);
        Eigen::Index i = d - 1;
        while (i >= 0) {
            if (++k(i) < count(i)) break;
            k(i) = 0;
            --i;
        }
        if (i < 0) break;
    }
}

}  // namespace

long long boundary_cover(const Region& region, double r) {
    if (!(r > 0)) throw DomainError("boundary_cover: r must be positive");
    const int d = region.dimension;
    const double slack = r * (1.0 + std::sqrt(static_cast<double>(d)));
    Point lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        lo(i) = region.bounds.side(i).lo - slack - r;
        hi(i) = region.bounds.side(i).hi + slack + r;
    }
    long long cells = 0;
    for_each_grid_centre(lo, hi, r, [&](const Point& x) {
        const double s = region.sdf(x);
        if (!std::isfinite(s)) throw OracleError("boundary_cover: non-finite sdf value");
        if (std::abs(s) < slack) ++cells;
    });
    return cells;
}

std::vector<MinkowskiSample> minkowski_profile(const Region& region, const std::vector<double>& radii,
                                               double step_factor) {
    if (!(step_factor > 0 && step_factor <= 0.25)) throw DomainError("minkowski_profile: step factor must be in (0, 1/4]");
    std::vector<MinkowskiSample> out;
    const int d = region.dimension;
    for (std::size_t j = 0; j < radii.size(); ++j) {
        const double r = radii[j];
        if (!(r > 0)) throw DomainError("minkowski_profile: radii must be positive");
        if (j > 0 && !(r < radii[j - 1])) throw DomainError("minkowski_profile: radii must be decreasing");
        const double step = r * step_factor;
        Point lo(d), hi(d);
        for (int i = 0; i < d; ++i) {
            lo(i) = region.bounds.side(i).lo - 2 * r;
            hi(i) = region.bounds.side(i).hi + 2 * r;
        }
        long long hits = 0;
        for_each_grid_centre(lo, hi, step, [&](const Point& x) {
            if (std::abs(region.sdf(x)) < r) ++hits;
        });
        out.push_back({r, static_cast<double>(hits) * std::pow(step, d) / (2 * r)});
    }
    return out;
}

std::vector<AxisBox> parse_boxes(std::istream& in) {
    std::vector<AxisBox> boxes;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<Interval> sides;
        std::stringstream row(line);
        std::string field;
        while (std::getline(row, field, ';')) {
            const auto comma = field.find(',');
            if (comma == std::string::npos) {
                throw ParseError("box line " + std::to_string(line_no) + ": expected 'lo,hi'");
            }
            try {
                std::size_t used = 0;
                const std::string lo_text = field.substr(0, comma);
                const std::string hi_text = field.substr(comma + 1);
                const double lo = std::stod(lo_text, &used);
                if (lo_text.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("trailing");
                const double hi = std::stod(hi_text, &used);
                if (hi_text.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("trailing");
                sides.emplace_back(lo, hi);
            } catch (const DomainError&) {
                throw;
            } catch (const std::exception&) {
                throw ParseError("box line " + std::to_string(line_no) + ": malformed number in '" + field + "'");
            }
        }
        boxes.emplace_back(std::move(sides));
    }
    return boxes;
}

BoxUnion parse_box_union(std::istream& in) {
    const auto boxes = parse_boxes(in);
    if (boxes.empty()) return {};
    return normalize_box_union(boxes);
}

BoxUnion parse_box_union(const std::string& text) {
    std::istringstream in(text);
    return parse_box_union(in);
}

void write_box_union(std::ostream& out, const BoxUnion& u) {
    const auto old = out.precision(17);
    for (const auto& b : u.boxes()) {
        for (int i = 0; i < b.dimension(); ++i) {
            if (i > 0) out << ';';
            out << b.side(i).lo << ',' << b.side(i).hi;
        }
        out << '\n';
    }
    out.precision(old);
}

}  // namespace plunge
