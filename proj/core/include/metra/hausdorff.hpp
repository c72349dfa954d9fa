#pragma once

#include <vector>

#include "metra/point.hpp"
#include "metra/space.hpp"

namespace metra {

// Distance from a point to a finite set: min over the set.
double dist_to_set(const Space& s, const Point& x, const PointList& M);

// One-sided deviation beta(M, W) = max_{x in M} dist(x, W). Not symmetric.
double deviation(const Space& s, const PointList& M, const PointList& W);

// Hausdorff distance alpha(M, W) = max{beta(M,W), beta(W,M)}.
double hausdorff(const Space& s, const PointList& M, const PointList& W);

double diameter(const Space& s, const PointList& M);
double cross_diameter(const Space& s, const PointList& M, const PointList& W);

// Metric eps-projection: all m in M with dist(x,m) <= dist(x,M) + eps + 1e-12
// (the absolute slack absorbs ties between equidistant nearest points).
PointList eps_projection(const Space& s, const Point& x, const PointList& M,
                         double eps);

// Midpoint set: unions of geodesic midpoints omega(x,v,1/2), omega(y,u,1/2)
// over x in M with v among its nearest points of W, and y in W with u among
// its nearest points of M. In metrically convex spaces it realizes
// alpha(M,Omega) = alpha(Omega,W) = alpha(M,W)/2. Duplicates are removed.
PointList midpoint_set(const Space& s, const PointList& M, const PointList& W);

// Generalized closed balls B[M,r] = {x : dist(x,M) <= r} in a finite space,
// compared through alpha(B[M,r], B[W,R]) <= alpha(M,W) + |R - r|.
struct GeneralizedBallCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;
  std::vector<std::size_t> ball_M, ball_W;  // member indices
};
GeneralizedBallCheck generalized_ball_check(const Space& finite_space,
                                            const std::vector<std::size_t>& M,
                                            double r,
                                            const std::vector<std::size_t>& W,
                                            double R, double tol = 1e-9);

// True when all points are pairwise farther apart than tol (a valid net).
bool points_distinct(const Space& s, const PointList& pts, double tol = 1e-12);

// Removes duplicate points (pairwise dist <= tol keeps the first occurrence).
PointList dedupe_points(const Space& s, const PointList& pts, double tol = 1e-12);

}  // namespace metra
