#include "plunge/whitney.hpp"

#include <algorithm>
#include <cmath>

namespace plunge {

int coarsest_level(const Region& region) {
    double widest = 0.0;
    for (int i = 0; i < region.dimension; ++i) widest = std::max(widest, region.bounds.side(i).length());
    return -static_cast<int>(std::ceil(std::log2(widest)));
}

WhitneyDecomposition whitney_decompose(const Region& region, int cutoff) {
    const int d = region.dimension;
    if (d < 1 || region.bounds.dimension() != d) throw DimensionMismatch("whitney_decompose: region dimension mismatch");
    const int base = coarsest_level(region);
    if (cutoff < base) throw DomainError("whitney_decompose: cutoff level coarser than the bounding cube");

    WhitneyDecomposition w;
    w.dimension = d;
    w.base_level = base;
    w.cutoff = cutoff;
    w.origin.resize(d);
    for (int i = 0; i < d; ++i) w.origin(i) = region.bounds.side(i).lo;

    const double root_d = std::sqrt(static_cast<double>(d));
    std::vector<DyadicCube> stack;
    stack.push_back({base, Eigen::VectorXi::Zero(d), Point(), std::ldexp(1.0, -base), 0.0});
    while (!stack.empty()) {
        DyadicCube q = std::move(stack.back());
        stack.pop_back();
        q.center = w.origin + q.side * (q.index.cast<double>().array() + 0.5).matrix();
        const double s = region.sdf(q.center);
        if (!std::isfinite(s)) throw OracleError("whitney_decompose: non-finite sdf value");
        const double diam = q.side * root_d;
        const double radius = 0.5 * diam;
        if (s + radius <= 0) continue;
        q.certified_dist = s - radius;
        if (q.level < cutoff && q.certified_dist >= 2 * diam) {
            w.interior_cubes.push_back(std::move(q));
            continue;
        }
        if (q.level >= cutoff) {
            w.boundary_cells.push_back(std::move(q));
            continue;
        }
        const int children = 1 << d;
        for (int c = children - 1; c >= 0; --c) {
            DyadicCube child;
            child.level = q.level + 1;
            child.side = 0.5 * q.side;
            child.index = 2 * q.index;
            for (int i = 0; i < d; ++i) child.index(i) += (c >> i) & 1;
            stack.push_back(std::move(child));
        }
    }
    return w;
}

long long ShellCensus::count(int level) const {
    const auto it = counts.find(level);
    return it == counts.end() ? 0 : it->second;
}

double ShellCensus::max_fitted(int lo, int hi) const {
    double best = 0.0;
    for (int l = lo; l <= hi; ++l) {
        best = std::max(best, static_cast<double>(count(l)) * std::ldexp(1.0, -(dimension - 1) * l));
    }
    return best;
}

ShellCensus shell_census(const WhitneyDecomposition& w) {
    ShellCensus census;
    census.dimension = w.dimension;
    for (const auto& q : w.interior_cubes) ++census.counts[q.level];
    for (const auto& [level, n] : census.counts) {
        census.fitted[level] = static_cast<double>(n) * std::ldexp(1.0, -(w.dimension - 1) * level);
    }
    return census;
}

void write_whitney_csv(std::ostream& out, const WhitneyDecomposition& w) {
    const auto old = out.precision(17);
    out << "level";
    for (int i = 0; i < w.dimension; ++i) out << ",x" << (i + 1);
    out << ",side,certified_dist\n";
    for (const auto* cubes : {&w.interior_cubes, &w.boundary_cells}) {
        for (const auto& q : *cubes) {
            out << q.level;
            for (int i = 0; i < w.dimension; ++i) out << ',' << q.center(i);
            out << ',' << q.side << ',' << q.certified_dist << '\n';
        }
    }
    out.precision(old);
}

}  // namespace plunge
