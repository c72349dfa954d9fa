#pragma once

#include <vector>

#include "metra/projection.hpp"

namespace metra {

// Point-cloud discretizations of convex sets for the delta-projection
// harness. Each builder concentrates samples on the set boundary and on the
// spheres around `x` at the given thresholds (the curves where projection
// sets gain and lose points), so deviations between projection sets are
// resolved to ~mesh rather than to the interior grid spacing.

// Euclidean disk of radius R centered at c (2-D).
SampledConvexSet disk_fixture(const Space& s, const Point& c, double R,
                              const Point& x, const std::vector<double>& thresholds,
                              int boundary_n = 4000, int interior_n = 60);

// Euclidean half-disk: disk intersected with the half-plane
// {z : <z - c, n> <= 0} for a unit normal n.
SampledConvexSet halfdisk_fixture(const Space& s, const Point& c, double R,
                                  const std::vector<double>& normal,
                                  const Point& x,
                                  const std::vector<double>& thresholds,
                                  int boundary_n = 4000, int interior_n = 60);

// Klein metric ball of hyperbolic radius R centered at c (2-D model
// coordinates), sampled with geodesic shells around both c and x.
SampledConvexSet klein_cap_fixture(const Space& klein, const Point& c, double R,
                                   const Point& x,
                                   const std::vector<double>& thresholds,
                                   int boundary_n = 1200, int rings = 24);

// Geodesic segment discretized by arclength; valid in any geodesic model.
SampledConvexSet segment_fixture(const Space& s, const Point& a, const Point& b,
                                 int n = 20000);

}  // namespace metra
