#include "metra/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace metra {

double dist_to_set(const Space& s, const Point& x, const PointList& M) {
  if (M.empty()) throw std::invalid_argument("empty point set");
  double best = std::numeric_limits<double>::infinity();
  for (const Point& m : M) best = std::min(best, s.dist(x, m));
  return best;
}

double deviation(const Space& s, const PointList& M, const PointList& W) {
  if (M.empty() || W.empty()) throw std::invalid_argument("empty point set");
  double worst = 0.0;
  for (const Point& x : M) worst = std::max(worst, dist_to_set(s, x, W));
  return worst;
}

double hausdorff(const Space& s, const PointList& M, const PointList& W) {
  return std::max(deviation(s, M, W), deviation(s, W, M));
}

double diameter(const Space& s, const PointList& M) {
  double d = 0.0;
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = i + 1; j < M.size(); ++j)
      d = std::max(d, s.dist(M[i], M[j]));
  return d;
}

double cross_diameter(const Space& s, const PointList& M, const PointList& W) {
  double d = 0.0;
  for (const Point& x : M)
    for (const Point& y : W) d = std::max(d, s.dist(x, y));
  return d;
}

PointList eps_projection(const Space& s, const Point& x, const PointList& M,
                         double eps) {
  if (eps < 0.0) throw std::invalid_argument("eps must be nonnegative");
  const double base = dist_to_set(s, x, M);
  PointList out;
  for (const Point& m : M)
    if (s.dist(x, m) <= base + eps + 1e-12) out.push_back(m);
  return out;
}

bool points_distinct(const Space& s, const PointList& pts, double tol) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (s.dist(pts[i], pts[j]) <= tol) return false;
  return true;
}

PointList dedupe_points(const Space& s, const PointList& pts, double tol) {
  PointList out;
  for (const Point& p : pts) {
    bool seen = false;
    for (const Point& q : out)
      if (s.dist(p, q) <= tol) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(p);
  }
  return out;
}

PointList midpoint_set(const Space& s, const PointList& M, const PointList& W) {
  if (!s.is_geodesic())
    throw std::invalid_argument("midpoint set needs a geodesic space");
  PointList omega;
  for (const Point& x : M)
    for (const Point& v : eps_projection(s, x, W, 0.0))
      omega.push_back(s.omega(x, v, 0.5));
  for (const Point& y : W)
    for (const Point& u : eps_projection(s, y, M, 0.0))
      omega.push_back(s.omega(y, u, 0.5));
  return dedupe_points(s, omega);
}

GeneralizedBallCheck generalized_ball_check(const Space& fs,
                                            const std::vector<std::size_t>& M,
                                            double r,
                                            const std::vector<std::size_t>& W,
                                            double R, double tol) {
  if (fs.kind() != SpaceKind::Finite)
    throw std::invalid_argument("generalized balls are computed in finite spaces");
  auto ball = [&](const std::vector<std::size_t>& core, double rad) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      double d = std::numeric_limits<double>::infinity();
      for (std::size_t c : core) d = std::min(d, fs.matrix()[i][c]);
      if (d <= rad) out.push_back(i);
    }
    return out;
  };
  auto as_points = [](const std::vector<std::size_t>& idx) {
    PointList out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(Point::at_index(i));
    return out;
  };
  GeneralizedBallCheck res;
  res.ball_M = ball(M, r);
  res.ball_W = ball(W, R);
  res.lhs = hausdorff(fs, as_points(res.ball_M), as_points(res.ball_W));
  res.rhs = hausdorff(fs, as_points(M), as_points(W)) + std::abs(R - r);
  res.ok = res.lhs <= res.rhs + tol;
  return res;
}

}  // namespace metra
