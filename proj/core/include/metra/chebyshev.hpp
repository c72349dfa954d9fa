#pragma once

#include <optional>
#include <vector>

#include "metra/point.hpp"
#include "metra/space.hpp"

namespace metra {

struct CenterResult {
  PointList centers;
  double radius = 0.0;
  long iterations = 0;
  double residual = 0.0;
};

// Relative Chebyshev radius/centers of M with respect to a finite W:
// radius = min_{w in W} beta(M, w); centers collect the argmin within a
// clustering tolerance.
CenterResult relative_radius_centers(const Space& s, const PointList& M,
                                     const PointList& W, double tol = 1e-9);

// Self-relative classification of a distinct-point net: closest-pair and
// covering quantities, diametral points, self centers, and the derived
// membership predicates.
struct NetClassification {
  double m = 0.0;        // min pairwise distance
  double m1 = 0.0;       // max over x of dist(x, S \ {x})
  double D = 0.0;        // diameter
  double R0 = 0.0;       // self-relative Chebyshev radius
  PointList h, h1;       // argmin / argmax sets for m and m1
  PointList Z0;          // self-relative centers
  PointList H;           // diametral points
  PointList Q0;          // points realizing beta(Z0, x) = R0
  bool in_d0 = false;           // D == R0
  bool in_dm1 = false;          // diametral net with a point at distance D from all others
  bool in_d0_Nminus1 = false;   // diametral net with a point at distance D from N-2 others
  int Z0_cardinality = 0;
};
NetClassification self_sets(const Space& s, const PointList& S, double tol = 1e-9);

// Membership in the closure of the nets with a unique self center:
// D(Z0(S)) < R0(S), or two points x,y at distance R0 with
// D({x,y}, S \ {x,y}) = R0.
bool closure_Z1_membership(const Space& s, const PointList& S, double tol = 1e-9);

struct CenterOptions {
  double tol = 1e-8;
  long max_iter = 1'000'000;
};

// Chebyshev center by geodesic descent toward the farthest point, followed by
// an adaptive level-refinement phase (same move, adaptive step) and, in
// Euclidean spaces, an active-set polish. Returns a single center.
CenterResult chebyshev_center(const Space& s, const PointList& M,
                              const CenterOptions& opt = {});

// Best covering by at most N points (k-center). Exact mode enumerates
// partitions (guarded); local mode runs seeded alternating assign/recenter.
struct BestNetResult {
  PointList net;
  double radius = 0.0;
  bool exact = false;
};
enum class BestNetMode { Exact, Local };
BestNetResult best_nnet(const Space& s, const PointList& M, int N,
                        BestNetMode mode, unsigned seed = 1,
                        std::size_t partition_guard = 100'000);

// Evaluates the perturbation bounds for relative radii:
//   |R_W(M) - R_B(A)| <= max{beta(M,A)+beta(B,W), beta(A,M)+beta(W,B)}
//   |R_W(M) - R_B(A)| <= alpha(M,A) + alpha(W,B)
struct RadiusBoundsReport {
  double lhs = 0.0;
  double rhs_deviation = 0.0;
  double rhs_alpha = 0.0;
  double slack_deviation = 0.0;
  double slack_alpha = 0.0;
  bool ok = false;
};
RadiusBoundsReport radius_perturbation_bounds(const Space& s, const PointList& M,
                                              const PointList& W,
                                              const PointList& A,
                                              const PointList& B,
                                              double tol = 1e-9);

// Euclidean only: is the Chebyshev center inside conv(M) (within tol)?
bool hull_membership_check(const Space& s, const PointList& M, double tol = 1e-7);

}  // namespace metra
