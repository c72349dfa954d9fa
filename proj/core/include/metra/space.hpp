#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "metra/point.hpp"

namespace metra {

enum class SpaceKind { Euclidean, KleinBall, Finite };

struct MetricViolation {
  enum class Axiom { Shape, Diagonal, Negative, Symmetry, Triangle };
  Axiom axiom;
  std::size_t i = 0, j = 0, k = 0;
  double slack = 0.0;
  std::string message;
};

// Model metric spaces: Euclidean(n), the Klein ball of radius r with curvature
// constant k (hyperbolic metric, Euclidean norm), and finite spaces given by a
// distance matrix. The two continuous models are geodesic; the geodesic
// operator omega() is unavailable on finite spaces.
class Space {
 public:
  static Space euclidean(std::size_t dim);
  static Space klein_ball(double r, double k);
  // Validates the metric axioms; throws std::invalid_argument on violation.
  static Space finite(std::vector<std::vector<double>> d, double rel_tol = 1e-9);

  SpaceKind kind() const { return kind_; }
  bool is_geodesic() const { return kind_ != SpaceKind::Finite; }

  std::size_t dim() const { return dim_; }
  double klein_r() const { return r_; }
  double klein_k() const { return k_; }
  std::size_t size() const { return d_.size(); }
  const std::vector<std::vector<double>>& matrix() const { return d_; }

  // Throws if the point does not belong to this space (dimension mismatch,
  // Klein point on/outside the boundary, index out of range).
  void require_point(const Point& p) const;

  double dist(const Point& a, const Point& b) const;

  // Point z on the segment/line through x,y with dist(x,z) = |lambda|*dist(x,y),
  // ordered so that lambda=0 -> x, lambda=1 -> y; lambda outside [0,1] extends
  // the line (Klein lines are complete, Euclidean lines are infinite).
  Point omega(const Point& x, const Point& y, double lambda) const;

  // dist(base + u, base + v) where u,v are coordinate displacements. Avoids
  // the cancellation in forming (base+u)-(base+v) for very close points.
  double dist_displaced(const Point& base, const std::vector<double>& u,
                        const std::vector<double>& v) const;

 private:
  friend std::variant<Space, MetricViolation> validate_finite_metric(
      const std::vector<std::vector<double>>& d, double rel_tol);
  Space() = default;
  SpaceKind kind_ = SpaceKind::Euclidean;
  std::size_t dim_ = 0;
  double r_ = 1.0, k_ = 1.0;
  std::vector<std::vector<double>> d_;
};

// Checks the metric axioms of a candidate distance matrix and reports the
// first violated one (indices and slack) instead of constructing a space.
std::variant<Space, MetricViolation> validate_finite_metric(
    const std::vector<std::vector<double>>& d, double rel_tol = 1e-9);

// Witness for the approximate-midpoint condition: a point z with
// 2*max{dist(x,z), dist(z,y)} < dist(x,y) + eps, or nullopt if none exists in
// the searched set (finite spaces are scanned exhaustively; geodesic spaces
// use the exact midpoint).
std::optional<Point> approx_midpoint_witness(const Space& s, const Point& x,
                                             const Point& y, double eps);

// Midpoint contraction from a common endpoint:
// 2*dist(omega(z,x,1/2), omega(z,y,1/2)) <= dist(x,y) + tol.
bool busemann_nonpositive(const Space& s, const Point& x, const Point& y,
                          const Point& z, double tol = 1e-9);

}  // namespace metra
