#include "metra/ball.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "metra/hausdorff.hpp"

namespace metra {
namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

// --- 2-D convex polygon helpers (Euclidean hulls) ---

struct Poly2 {
  std::vector<std::array<double, 2>> v;  // ccw hull, no repeats
};

double cross(const std::array<double, 2>& o, const std::array<double, 2>& a,
             const std::array<double, 2>& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Poly2 convex_hull_2d(const PointList& pts) {
  std::vector<std::array<double, 2>> p;
  p.reserve(pts.size());
  for (const Point& q : pts) p.push_back({q[0], q[1]});
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  const std::size_t n = p.size();
  if (n <= 2) return {p};
  std::vector<std::array<double, 2>> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return {h};
}

double seg_dist_2d(const std::array<double, 2>& a, const std::array<double, 2>& b,
                   double px, double py) {
  const double dx = b[0] - a[0], dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((px - a[0]) * dx + (py - a[1]) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double qx = a[0] + t * dx, qy = a[1] + t * dy;
  return std::hypot(px - qx, py - qy);
}

bool poly_contains(const Poly2& poly, double px, double py, double tol = 0.0) {
  if (poly.v.size() < 3) return false;
  for (std::size_t i = 0; i < poly.v.size(); ++i) {
    const auto& a = poly.v[i];
    const auto& b = poly.v[(i + 1) % poly.v.size()];
    if (cross(a, b, {px, py}) < -tol) return false;
  }
  return true;
}

double poly_boundary_dist(const Poly2& poly, double px, double py) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.v.size(); ++i)
    best = std::min(best, seg_dist_2d(poly.v[i], poly.v[(i + 1) % poly.v.size()],
                                      px, py));
  return best;
}

// Gilbert's algorithm: distance from x to conv(vertices) in any dimension.
std::vector<double> hull_project_gilbert(const PointList& verts,
                                         const std::vector<double>& x) {
  std::vector<double> z = verts[0].coords();
  for (int it = 0; it < 20000; ++it) {
    const std::vector<double> g = vec::sub(z, x);
    std::size_t bi = 0;
    double bv = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const double v = vec::dot(g, verts[i].coords());
      if (v < bv) {
        bv = v;
        bi = i;
      }
    }
    const std::vector<double> d = vec::sub(verts[bi].coords(), z);
    const double improve = -vec::dot(g, d);
    if (improve <= 1e-16 * (1.0 + vec::norm2(g))) break;
    double t = improve / vec::norm2(d);
    t = std::clamp(t, 0.0, 1.0);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += t * d[i];
  }
  return z;
}

// Golden-section minimization of a convex function on [0,1].
template <class F>
double golden_min(F f, double lo = 0.0, double hi = 1.0, double tol = 1e-13) {
  const double gr = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

ConvexBody ConvexBody::hull(PointList verts) {
  if (verts.empty()) throw std::invalid_argument("hull needs vertices");
  ConvexBody b;
  b.kind = Kind::Hull;
  b.vertices = std::move(verts);
  return b;
}

ConvexBody ConvexBody::metric_ball(Point c, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("ball radius must be positive");
  ConvexBody b;
  b.kind = Kind::MetricBall;
  b.center = std::move(c);
  b.radius = r;
  return b;
}

ConvexBody ConvexBody::segment(Point a, Point bpt) {
  ConvexBody b;
  b.kind = Kind::Segment;
  b.a = std::move(a);
  b.b = std::move(bpt);
  return b;
}

double body_beta(const Space& s, const ConvexBody& M, const Point& x) {
  switch (M.kind) {
    case ConvexBody::Kind::Hull: {
      double worst = 0.0;
      for (const Point& v : M.vertices) worst = std::max(worst, s.dist(x, v));
      return worst;
    }
    case ConvexBody::Kind::MetricBall:
      return s.dist(x, M.center) + M.radius;
    case ConvexBody::Kind::Segment:
      return std::max(s.dist(x, M.a), s.dist(x, M.b));
  }
  return 0.0;
}

Point body_project(const Space& s, const ConvexBody& M, const Point& x) {
  switch (M.kind) {
    case ConvexBody::Kind::Hull: {
      if (s.kind() != SpaceKind::Euclidean)
        throw std::invalid_argument("hull bodies live in Euclidean spaces");
      return Point(hull_project_gilbert(M.vertices, x.coords()));
    }
    case ConvexBody::Kind::MetricBall: {
      const double d = s.dist(x, M.center);
      if (d <= M.radius) return x;
      return s.omega(M.center, x, M.radius / d);
    }
    case ConvexBody::Kind::Segment: {
      if (s.dist(M.a, M.b) == 0.0) return M.a;
      if (s.kind() == SpaceKind::Euclidean) {
        const std::vector<double> d = vec::sub(M.b.coords(), M.a.coords());
        const std::vector<double> w = vec::sub(x.coords(), M.a.coords());
        const double t = std::clamp(vec::dot(w, d) / vec::norm2(d), 0.0, 1.0);
        return Point(vec::add(M.a.coords(), vec::scale(d, t)));
      }
      const double t = golden_min(
          [&](double u) { return s.dist(x, s.omega(M.a, M.b, u)); });
      return s.omega(M.a, M.b, t);
    }
  }
  return x;
}

double body_dist(const Space& s, const ConvexBody& M, const Point& x) {
  switch (M.kind) {
    case ConvexBody::Kind::Hull: {
      if (s.kind() != SpaceKind::Euclidean)
        throw std::invalid_argument("hull bodies live in Euclidean spaces");
      if (x.dim() == 2) {
        const Poly2 poly = convex_hull_2d(M.vertices);
        if (poly_contains(poly, x[0], x[1])) return 0.0;
        if (poly.v.size() < 3) {
          double best = std::numeric_limits<double>::infinity();
          if (poly.v.size() == 1)
            best = std::hypot(x[0] - poly.v[0][0], x[1] - poly.v[0][1]);
          else
            best = seg_dist_2d(poly.v[0], poly.v[1], x[0], x[1]);
          return best;
        }
        return poly_boundary_dist(poly, x[0], x[1]);
      }
      const std::vector<double> z = hull_project_gilbert(M.vertices, x.coords());
      return std::sqrt(vec::norm2(vec::sub(z, x.coords())));
    }
    case ConvexBody::Kind::MetricBall:
      return std::max(0.0, s.dist(x, M.center) - M.radius);
    case ConvexBody::Kind::Segment:
      return s.dist(x, body_project(s, M, x));
  }
  return 0.0;
}

double body_codist(const Space& s, const ConvexBody& M, const Point& x) {
  switch (M.kind) {
    case ConvexBody::Kind::Hull: {
      if (s.kind() != SpaceKind::Euclidean)
        throw std::invalid_argument("hull bodies live in Euclidean spaces");
      if (x.dim() != 2) return 0.0;  // flat/unsupported hulls: convention 0
      const Poly2 poly = convex_hull_2d(M.vertices);
      if (poly.v.size() < 3 || !poly_contains(poly, x[0], x[1])) return 0.0;
      return poly_boundary_dist(poly, x[0], x[1]);
    }
    case ConvexBody::Kind::MetricBall:
      return std::max(0.0, M.radius - s.dist(x, M.center));
    case ConvexBody::Kind::Segment:
      return 0.0;  // degenerate body
  }
  return 0.0;
}

double body_diameter(const Space& s, const ConvexBody& M) {
  switch (M.kind) {
    case ConvexBody::Kind::Hull:
      return diameter(s, M.vertices);
    case ConvexBody::Kind::MetricBall:
      return 2.0 * M.radius;
    case ConvexBody::Kind::Segment:
      return s.dist(M.a, M.b);
  }
  return 0.0;
}

double psi(const Space& s, const ConvexBody& M, const Point& x) {
  return 0.5 * (body_beta(s, M, x) + body_dist(s, M, x) - body_codist(s, M, x));
}

double r_fun(const Space& s, const ConvexBody& M, const Point& x) {
  return 0.5 * (body_beta(s, M, x) - body_dist(s, M, x) + body_codist(s, M, x));
}

double ball_deviation_from_set(const Space& s, const ConvexBody& M,
                               const Point& x, double r) {
  return std::max(0.0, body_beta(s, M, x) - r);
}

double set_deviation_from_ball(const Space& s, const ConvexBody& M,
                               const Point& x, double r) {
  if (body_dist(s, M, x) > 0.0) return r + body_dist(s, M, x);
  return std::max(0.0, r + body_dist(s, M, x) - body_codist(s, M, x));
}

double ball_hausdorff(const Space& s, const ConvexBody& M, const Point& x,
                      double r) {
  if (body_dist(s, M, x) > 0.0)
    return std::max(r + body_dist(s, M, x), body_beta(s, M, x) - r);
  return std::max(r + body_dist(s, M, x) - body_codist(s, M, x),
                  body_beta(s, M, x) - r);
}

namespace {

// Compass search with diagonal moves; psi is 3/2-Lipschitz so the final step
// size bounds the value error.
Point pattern_search(const Space& s, const ConvexBody& M, Point start,
                     double step, double tol, long& evals) {
  Point best = std::move(start);
  double fbest = psi(s, M, best);
  const std::size_t dim = best.dim();
  std::vector<std::vector<double>> dirs;
  for (std::size_t i = 0; i < dim; ++i)
    for (double sign : {1.0, -1.0}) {
      std::vector<double> d(dim, 0.0);
      d[i] = sign;
      dirs.push_back(d);
    }
  if (dim == 2) {
    dirs.push_back({kInvSqrt2, kInvSqrt2});
    dirs.push_back({-kInvSqrt2, kInvSqrt2});
    dirs.push_back({kInvSqrt2, -kInvSqrt2});
    dirs.push_back({-kInvSqrt2, -kInvSqrt2});
  }
  while (step > tol / 4.0) {
    bool moved = false;
    for (const auto& d : dirs) {
      std::vector<double> c = best.coords();
      for (std::size_t i = 0; i < dim; ++i) c[i] += step * d[i];
      Point cand(std::move(c));
      if (s.kind() == SpaceKind::KleinBall &&
          vec::norm2(cand.coords()) >= s.klein_r() * s.klein_r())
        continue;
      const double f = psi(s, M, cand);
      ++evals;
      if (f < fbest - 1e-15) {
        fbest = f;
        best = std::move(cand);
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return best;
}

}  // namespace

BallFit best_ball(const Space& s, const ConvexBody& M, double tol) {
  BallFit fit;
  switch (M.kind) {
    case ConvexBody::Kind::MetricBall:
      fit.center = M.center;
      fit.radius = M.radius;
      fit.hausdorff_value = 0.0;
      return fit;
    case ConvexBody::Kind::Segment: {
      const double t = golden_min(
          [&](double u) { return psi(s, M, s.omega(M.a, M.b, u)); }, 0.0, 1.0,
          std::min(tol, 1e-12));
      fit.center = s.omega(M.a, M.b, t);
      break;
    }
    case ConvexBody::Kind::Hull: {
      if (s.kind() != SpaceKind::Euclidean)
        throw std::invalid_argument("hull bodies live in Euclidean spaces");
      const std::size_t dim = M.vertices[0].dim();
      if (dim > 3) throw std::invalid_argument("best_ball supports dim <= 3");
      std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
      std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
      for (const Point& v : M.vertices)
        for (std::size_t i = 0; i < dim; ++i) {
          lo[i] = std::min(lo[i], v[i]);
          hi[i] = std::max(hi[i], v[i]);
        }
      const int cells = dim <= 2 ? 64 : 24;
      Point best = M.vertices[0];
      double fbest = std::numeric_limits<double>::infinity();
      std::vector<int> idx(dim, 0);
      for (;;) {
        std::vector<double> c(dim);
        for (std::size_t i = 0; i < dim; ++i)
          c[i] = lo[i] + (hi[i] - lo[i]) * (idx[i] + 0.5) / cells;
        Point cand(std::move(c));
        const double f = psi(s, M, cand);
        ++fit.evaluations;
        if (f < fbest) {
          fbest = f;
          best = cand;
        }
        std::size_t d = 0;
        while (d < dim && ++idx[d] == cells) idx[d++] = 0;
        if (d == dim) break;
      }
      double step = 0.0;
      for (std::size_t i = 0; i < dim; ++i)
        step = std::max(step, (hi[i] - lo[i]) / cells);
      fit.center = pattern_search(s, M, best, std::max(step, tol), tol,
                                  fit.evaluations);
      break;
    }
  }
  fit.radius = r_fun(s, M, fit.center);
  fit.hausdorff_value = psi(s, M, fit.center);
  return fit;
}

std::vector<StabilityRow> best_ball_stability(const Space& s,
                                              const std::vector<ConvexBody>& family,
                                              const ConvexBody& limit,
                                              double tol) {
  const BallFit lim = best_ball(s, limit, tol);
  std::vector<StabilityRow> rows;
  rows.reserve(family.size());
  for (const ConvexBody& M : family) {
    const BallFit f = best_ball(s, M, tol);
    StabilityRow row;
    row.center_gap = s.dist(f.center, lim.center);
    // alpha between the bodies through their farthest/nearest functionals on a
    // vertex/endpoint skeleton
    PointList a, b;
    auto skeleton = [](const ConvexBody& B) {
      if (B.kind == ConvexBody::Kind::Hull) return B.vertices;
      if (B.kind == ConvexBody::Kind::Segment) return PointList{B.a, B.b};
      return PointList{B.center};
    };
    a = skeleton(M);
    b = skeleton(limit);
    double dev_ab = 0.0, dev_ba = 0.0;
    for (const Point& p : a) dev_ab = std::max(dev_ab, body_dist(s, limit, p));
    for (const Point& p : b) dev_ba = std::max(dev_ba, body_dist(s, M, p));
    row.alpha_to_limit = std::max(dev_ab, dev_ba);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace metra
