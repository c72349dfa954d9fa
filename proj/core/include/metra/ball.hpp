#pragma once

#include <optional>
#include <vector>

#include "metra/point.hpp"
#include "metra/space.hpp"

namespace metra {

// Convex compacts that support the ball-approximation functionals: a convex
// hull of finitely many points (Euclidean only), a closed metric ball in any
// geodesic model, or a geodesic segment.
struct ConvexBody {
  enum class Kind { Hull, MetricBall, Segment };
  Kind kind = Kind::Segment;
  PointList vertices;       // Hull
  Point center;             // MetricBall
  double radius = 0.0;      // MetricBall
  Point a, b;               // Segment endpoints

  static ConvexBody hull(PointList verts);
  static ConvexBody metric_ball(Point c, double r);
  static ConvexBody segment(Point a, Point b);
};

// sup_{m in M} dist(x, m): vertices for hulls, dist+radius for balls,
// endpoint max for segments.
double body_beta(const Space& s, const ConvexBody& M, const Point& x);
// dist(x, M): 0 inside.
double body_dist(const Space& s, const ConvexBody& M, const Point& x);
// dist(x, X \ M): boundary distance when x is inside M, else 0. Degenerate
// bodies (segments, flat hulls) use the convention 0.
double body_codist(const Space& s, const ConvexBody& M, const Point& x);
double body_diameter(const Space& s, const ConvexBody& M);
// Nearest point of M (exact for balls/segments/2-D hulls, iterative in
// higher dimensions).
Point body_project(const Space& s, const ConvexBody& M, const Point& x);

// The two half-deviation functionals; psi + r = beta(M, x) identically.
double psi(const Space& s, const ConvexBody& M, const Point& x);
double r_fun(const Space& s, const ConvexBody& M, const Point& x);

// beta(M, B[x,r]) = max{0, beta(M,x) - r}.
double ball_deviation_from_set(const Space& s, const ConvexBody& M,
                               const Point& x, double r);
// beta(B[x,r], M) = r + dist(x,M) for x outside M; for general x the upper
// bound max{0, r + dist(x,M) - codist(x)} is returned.
double set_deviation_from_ball(const Space& s, const ConvexBody& M,
                               const Point& x, double r);
// alpha(B[x,r], M): exact for exterior x, upper bound for interior x.
double ball_hausdorff(const Space& s, const ConvexBody& M, const Point& x,
                      double r);

struct BallFit {
  Point center;
  double radius = 0.0;
  double hausdorff_value = 0.0;
  long evaluations = 0;
};

// Best approximation of M by a closed ball in the Hausdorff metric:
// minimizes psi(M, .) over M (grid then local refinement); the optimal radius
// at x is r(M, x).
BallFit best_ball(const Space& s, const ConvexBody& M, double tol = 1e-7);

// Tabulates dist(center(M_n), center(M)) for a family converging to M.
struct StabilityRow {
  double alpha_to_limit = 0.0;  // alpha(M_n, M)
  double center_gap = 0.0;      // dist(center_n, center_limit)
};
std::vector<StabilityRow> best_ball_stability(const Space& s,
                                              const std::vector<ConvexBody>& family,
                                              const ConvexBody& limit,
                                              double tol = 1e-6);

}  // namespace metra
