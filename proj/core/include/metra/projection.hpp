#pragma once

#include <string>
#include <vector>

#include "metra/ball.hpp"
#include "metra/point.hpp"
#include "metra/space.hpp"

namespace metra {

// Nearest-point projection onto a convex body (unique in the supported
// models); thin wrapper over body_project with a feasibility check.
Point project_convex(const Space& s, const ConvexBody& M, const Point& x);

// Metric delta-projection onto a finite set (re-exported eps_projection).
PointList delta_projection(const Space& s, const Point& x, const PointList& M,
                           double delta);

// Disconnectivity measure: the largest gap over bipartitions, equal to the
// longest edge of a minimum spanning tree of the complete distance graph.
double lambda_disconnect(const Space& s, const PointList& M);

struct IneqRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
};

// A convex set discretized for the delta-projection harness: a point cloud
// whose resolution (mesh) is recorded and enters the check slack. For
// geodesic segments `arc` holds the arclength position of every point (in
// order); deviations between projection sets are then interval-exact.
struct SampledConvexSet {
  PointList pts;
  double mesh = 0.0;
  std::vector<double> arc;
};

// Difference-quotient monotonicity of delta-projections onto a convex set
// (three ratio inequalities plus two derived bounds), checked on the
// sampled set with the given slack.
std::vector<IneqRecord> ratio_monotonicity_check(
    const Space& s, const Point& x, const SampledConvexSet& M, double t,
    double eps, double delta, double eps2, double delta2, double slack);

// Stability of delta-projections under perturbation of the point, the set,
// and the tolerance; evaluates both stability bounds.
std::vector<IneqRecord> delta_projection_stability(
    const Space& s, const Point& x, const Point& y, const SampledConvexSet& M,
    const SampledConvexSet& W, double eps, double delta, double slack);

}  // namespace metra
