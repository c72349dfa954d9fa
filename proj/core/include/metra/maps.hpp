#pragma once

#include <optional>
#include <vector>

#include "metra/point.hpp"
#include "metra/space.hpp"

namespace metra {

// A map between metric spaces tabulated on a finite domain: values[i] is the
// image of domain[i]. All suprema below are exact over the finite domain.
struct MapTable {
  PointList domain;
  PointList values;
};

void require_same_domain(const MapTable& f, const MapTable& g);

// Weighted-sup metric: sup_x d(f(x), g(x)) e^{-dist(p,x)}.
double busemann_delta_p(const Space& X, const Space& Y, const MapTable& f,
                        const MapTable& g, const Point& p);

// Both sides of e^{-|pq|} delta_p <= delta_q <= e^{|pq|} delta_p.
struct DeltaPSandwich {
  double delta_p = 0.0;
  double delta_q = 0.0;
  double lower = 0.0;  // e^{-|pq|} delta_p
  double upper = 0.0;  // e^{+|pq|} delta_p
  bool ok = false;
};
DeltaPSandwich delta_p_equivalence_check(const Space& X, const Space& Y,
                                         const MapTable& f, const MapTable& g,
                                         const Point& p, const Point& q,
                                         double tol = 1e-12);

// Truncated ball-restricted series sum_i 2^-i d_i/(1+d_i), d_i the sup over
// the domain points within radii[i] of the center; the tail bound 2^-len is
// reported alongside.
struct KuratowskiValue {
  double value = 0.0;
  double tail_bound = 0.0;
};
KuratowskiValue kuratowski_delta(const Space& X, const Space& Y, const MapTable& f,
                                 const MapTable& g, const Point& center,
                                 const std::vector<double>& radii);

// Uniform Hoelder condition d(f(x), f(y)) <= B |xy|^a over all pairs.
bool holder_membership(const Space& X, const Space& Y, const MapTable& f,
                       double B, double alpha, double tol = 1e-12);

// The similarity coefficient when d(f(x), f(y)) / |xy| is constant over all
// pairs (relative tolerance), nullopt otherwise; 1 means isometry.
std::optional<double> similarity_coefficient(const Space& X, const Space& Y,
                                             const MapTable& f,
                                             double rel_tol = 1e-9);

}  // namespace metra
