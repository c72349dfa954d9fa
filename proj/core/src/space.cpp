#include "metra/space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace metra {
namespace {

// Lagrange identity: |a|^2|b|^2 - <a,b>^2 = sum_{i<j} (a_i b_j - a_j b_i)^2.
// With b = a + d the cross terms reduce to a_i d_j - a_j d_i, so every term is
// O(|d|^2) and the expression stays accurate when a and b nearly coincide.
double gram_cross(const std::vector<double>& a, const std::vector<double>& d) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const double c = a[i] * d[j] - a[j] * d[i];
      s += c * c;
    }
  return s;
}

// Hyperbolic distance in the Klein ball of radius r, curvature constant k:
//   dist = k * acosh(A / sqrt(B)),  A = r^2 - <x,y>, B = (r^2-|x|^2)(r^2-|y|^2).
// Evaluated as k * asinh(sqrt((A^2-B)/B)) with A^2-B expanded through the
// Lagrange identity; exact for distant points and cancellation-free for close
// ones.
double klein_dist_raw(double r, double k, const std::vector<double>& x,
                      const std::vector<double>& y) {
  const std::vector<double> d = vec::sub(y, x);
  const double r2 = r * r;
  double num = r2 * vec::norm2(d) - gram_cross(x, d);
  if (num < 0.0) num = 0.0;
  const double bx = r2 - vec::norm2(x);
  const double by = r2 - vec::norm2(y);
  return k * std::asinh(std::sqrt(num / (bx * by)));
}

// Chord through x in direction dir hits the sphere |z| = r at parameters
// t_minus < 0 < t_plus (x strictly inside).
std::pair<double, double> chord_roots(const std::vector<double>& x,
                                      const std::vector<double>& dir, double r) {
  const double a = vec::norm2(dir);
  const double b = vec::dot(x, dir);
  const double c = vec::norm2(x) - r * r;  // < 0 inside
  const double disc = b * b - a * c;
  const double sq = std::sqrt(disc);
  // stable quadratic roots
  const double q = -(b + std::copysign(sq, b));
  double t1, t2;
  if (b >= 0.0) {
    t1 = q / a;
    t2 = c / q;
  } else {
    t1 = c / q;
    t2 = q / a;
  }
  return {std::min(t1, t2), std::max(t1, t2)};
}

}  // namespace

Space Space::euclidean(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("euclidean dimension must be positive");
  Space s;
  s.kind_ = SpaceKind::Euclidean;
  s.dim_ = dim;
  return s;
}

Space Space::klein_ball(double r, double k) {
  if (!(r > 0.0) || !(k > 0.0))
    throw std::invalid_argument("klein ball requires r > 0 and k > 0");
  Space s;
  s.kind_ = SpaceKind::KleinBall;
  s.dim_ = 0;  // any coordinate dimension; fixed per point
  s.r_ = r;
  s.k_ = k;
  return s;
}

Space Space::finite(std::vector<std::vector<double>> d, double rel_tol) {
  auto v = validate_finite_metric(d, rel_tol);
  if (std::holds_alternative<MetricViolation>(v))
    throw std::invalid_argument("not a metric: " +
                                std::get<MetricViolation>(v).message);
  return std::get<Space>(std::move(v));
}

std::variant<Space, MetricViolation> validate_finite_metric(
    const std::vector<std::vector<double>>& d, double rel_tol) {
  const std::size_t n = d.size();
  auto fail = [&](MetricViolation::Axiom ax, std::size_t i, std::size_t j,
                  std::size_t k, double slack, std::string msg) {
    return MetricViolation{ax, i, j, k, slack, std::move(msg)};
  };
  if (n == 0)
    return fail(MetricViolation::Axiom::Shape, 0, 0, 0, 0.0, "empty matrix");
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].size() != n)
      return fail(MetricViolation::Axiom::Shape, i, 0, 0, 0.0,
                  "matrix is not square at row " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(d[i][j]))
        return fail(MetricViolation::Axiom::Shape, i, j, 0, 0.0,
                    "non-finite entry at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      scale = std::max(scale, std::abs(d[i][j]));
    }
  }
  const double tol = rel_tol * std::max(scale, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(d[i][i]) > tol)
      return fail(MetricViolation::Axiom::Diagonal, i, i, 0, std::abs(d[i][i]),
                  "nonzero diagonal at " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] < -tol)
        return fail(MetricViolation::Axiom::Negative, i, j, 0, -d[i][j],
                    "negative entry at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      if (std::abs(d[i][j] - d[j][i]) > tol)
        return fail(MetricViolation::Axiom::Symmetry, i, j, 0,
                    std::abs(d[i][j] - d[j][i]),
                    "asymmetric at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const double slack = d[i][k] - d[i][j] - d[j][k];
        if (slack > tol)
          return fail(MetricViolation::Axiom::Triangle, i, j, k, slack,
                      "triangle violated: d(" + std::to_string(i) + "," +
                          std::to_string(k) + ") > d(" + std::to_string(i) +
                          "," + std::to_string(j) + ") + d(" +
                          std::to_string(j) + "," + std::to_string(k) + ")");
      }
  Space s;
  s.kind_ = SpaceKind::Finite;
  s.d_ = d;
  return s;
}

void Space::require_point(const Point& p) const {
  switch (kind_) {
    case SpaceKind::Euclidean:
      if (p.is_index() || p.dim() != dim_)
        throw std::invalid_argument("point dimension mismatch");
      return;
    case SpaceKind::KleinBall: {
      if (p.is_index() || p.dim() == 0)
        throw std::invalid_argument("klein point must be a coordinate vector");
      if (!(vec::norm2(p.coords()) < r_ * r_))
        throw std::invalid_argument("klein point on or outside the boundary");
      return;
    }
    case SpaceKind::Finite:
      if (!p.is_index() || p.index() >= d_.size())
        throw std::invalid_argument("finite-space point must be a valid index");
      return;
  }
}

double Space::dist(const Point& a, const Point& b) const {
  require_point(a);
  require_point(b);
  switch (kind_) {
    case SpaceKind::Euclidean:
      return std::sqrt(vec::norm2(vec::sub(a.coords(), b.coords())));
    case SpaceKind::KleinBall:
      if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
      return klein_dist_raw(r_, k_, a.coords(), b.coords());
    case SpaceKind::Finite:
      return d_[a.index()][b.index()];
  }
  return 0.0;
}

double Space::dist_displaced(const Point& base, const std::vector<double>& u,
                             const std::vector<double>& v) const {
  const std::vector<double> a = vec::add(base.coords(), u);
  switch (kind_) {
    case SpaceKind::Euclidean: {
      double s = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        const double t = u[i] - v[i];
        s += t * t;
      }
      return std::sqrt(s);
    }
    case SpaceKind::KleinBall: {
      std::vector<double> d(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) d[i] = v[i] - u[i];
      const double r2 = r_ * r_;
      double num = r2 * vec::norm2(d) - gram_cross(a, d);
      if (num < 0.0) num = 0.0;
      const std::vector<double> bvec = vec::add(base.coords(), v);
      const double bx = r2 - vec::norm2(a);
      const double by = r2 - vec::norm2(bvec);
      return k_ * std::asinh(std::sqrt(num / (bx * by)));
    }
    case SpaceKind::Finite:
      throw std::invalid_argument("finite space has no displacements");
  }
  return 0.0;
}

Point Space::omega(const Point& x, const Point& y, double lambda) const {
  require_point(x);
  require_point(y);
  switch (kind_) {
    case SpaceKind::Euclidean:
      return Point(vec::lerp(x.coords(), y.coords(), lambda));
    case SpaceKind::KleinBall: {
      if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
      const std::vector<double> dir = vec::sub(y.coords(), x.coords());
      if (vec::norm2(dir) == 0.0) return x;
      // Klein geodesics are chords. The signed chord coordinate
      //   sigma(z) = (k/2) ln(|z-P| / |z-Q|),
      // P,Q the boundary hits, is an isometry onto the real line, so the point
      // at metric fraction lambda solves a logistic equation in the chord
      // parameter. Written through expm1 the offset from x is exact for tiny
      // lambda.
      const auto [tm, tp] = chord_roots(x.coords(), dir, r_);
      const double dxy = klein_dist_raw(r_, k_, x.coords(), y.coords());
      const double e0 = -tm / tp;
      const double g = std::exp(2.0 * lambda * dxy / k_);
      const double dt = -tm * std::expm1(2.0 * lambda * dxy / k_) / (1.0 + e0 * g);
      Point z(vec::add(x.coords(), vec::scale(dir, dt)));
      require_point(z);
      return z;
    }
    case SpaceKind::Finite:
      throw std::invalid_argument("finite space has no geodesic operator");
  }
  return x;
}

std::optional<Point> approx_midpoint_witness(const Space& s, const Point& x,
                                             const Point& y, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const double dxy = s.dist(x, y);
  if (s.is_geodesic()) {
    Point m = s.omega(x, y, 0.5);
    if (2.0 * std::max(s.dist(x, m), s.dist(m, y)) < dxy + eps) return m;
    return std::nullopt;
  }
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Point z = Point::at_index(i);
    const double v = 2.0 * std::max(s.dist(x, z), s.dist(z, y));
    if (v < best) {
      best = v;
      best_i = i;
    }
  }
  if (best < dxy + eps) return Point::at_index(best_i);
  return std::nullopt;
}

bool busemann_nonpositive(const Space& s, const Point& x, const Point& y,
                          const Point& z, double tol) {
  const Point mx = s.omega(z, x, 0.5);
  const Point my = s.omega(z, y, 0.5);
  return 2.0 * s.dist(mx, my) <= s.dist(x, y) + tol;
}

}  // namespace metra
