#pragma once

#include <Eigen/Core>
#include <cmath>
#include <map>
#include <ostream>
#include <vector>

#include "plunge/geometry.hpp"

namespace plunge {

/// Cube origin + side * (index + [0,1]^d) with side = 2^{-level}.
struct DyadicCube {
    int level = 0;
    Eigen::VectorXi index;
    Point center;
    double side = 0.0;
    /// sdf(center) - radius: a lower bound on dist(Q, complement).
    double certified_dist = 0.0;

    double diameter() const { return side * std::sqrt(static_cast<double>(center.size())); }
};

struct WhitneyDecomposition {
    int dimension = 0;
    Point origin;
    int base_level = 0;  ///< level of the starting cube
    int cutoff = 0;      ///< level D of the boundary cells
    std::vector<DyadicCube> interior_cubes;
    std::vector<DyadicCube> boundary_cells;
};

/// Recursive dyadic subdivision of the bounding cube. A cube at level l < D is
/// kept as an interior cube once sdf(center) - radius >= 2 diam; cubes with
/// sdf(center) + radius <= 0 are dropped; survivors at level D become
/// boundary cells.
WhitneyDecomposition whitney_decompose(const Region& region, int cutoff);

/// Coarsest level whose cube covers the region's bounding box.
int coarsest_level(const Region& region);

struct ShellCensus {
    int dimension = 0;
    std::map<int, long long> counts;  ///< level -> interior cubes of side 2^{-level}
    std::map<int, double> fitted;     ///< level -> count * 2^{-(d-1) level}

    long long count(int level) const;
    /// max of fitted constants over levels [lo, hi]
    double max_fitted(int lo, int hi) const;
};

ShellCensus shell_census(const WhitneyDecomposition& w);

/// CSV "level,x1,...,xd,side,certified_dist": interior cubes first, then
/// boundary cells.
void write_whitney_csv(std::ostream& out, const WhitneyDecomposition& w);

}  // namespace plunge
