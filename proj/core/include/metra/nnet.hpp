#pragma once

#include <optional>
#include <vector>

#include "metra/assign.hpp"
#include "metra/point.hpp"
#include "metra/space.hpp"

namespace metra {

// N-tuples with repetitions are plain point lists; all operations here are
// permutation-invariant in both arguments. p ranges over [1, inf]; pass
// std::numeric_limits<double>::infinity() for the bottleneck metric.

// l_p norm of coordinatewise distances between two equally sized tuples.
double rho_np(const Space& s, const PointList& X, const PointList& Y, double p);

struct Assignment {
  std::vector<int> perm;
  double cost = 0.0;
  double p = 2.0;
};

// Minimum of rho_np over all pairings, realized by an exact assignment
// (min-cost on p-th powers for finite p, bottleneck for p = inf).
Assignment alpha_p(const Space& s, const PointList& S, const PointList& T, double p);

// Hausdorff distance of the supports (duplicates collapsed).
double alpha_star(const Space& s, const PointList& S, const PointList& T);

// Quotient-metric bounds: alpha(supports) <= alpha_{p,R} <= alpha_p. The
// chain search relaxes through intermediate supports drawn from subsets of
// supp(S) u supp(T); `exact` is reported when the search family was complete
// and the shortest chain stabilized (or the bounds pinch).
struct AlphaPRBounds {
  double lower = 0.0;
  double upper = 0.0;
  std::optional<double> exact;
  int chain_edges = 1;  // number of alpha_p terms in the best chain found
};
AlphaPRBounds alpha_pR(const Space& s, const PointList& S, const PointList& T,
                       double p, int max_chain = 8);

// Coordinatewise geodesic interpolation along the optimal assignment;
// satisfies alpha_p(S,S(l)) + alpha_p(S(l),T) = alpha_p(S,T).
PointList nnet_interpolate(const Space& s, const PointList& S, const PointList& T,
                           double p, double lambda);

// The midpoint 2-nets of a pair of 2-nets: one 2-net generically, two when
// the Hausdorff distance equals the cross-diameter.
std::vector<PointList> twonet_midpoints(const Space& s, const PointList& S,
                                        const PointList& T);

// Midpoint map on 2-nets; pi({x,y}) = omega(x,y,1/2).
Point pi_midpoint(const Space& s, const PointList& S);

}  // namespace metra
