#include "metra/rng.hpp"

#include <cmath>
#include <stdexcept>

#include "metra/hausdorff.hpp"

namespace metra {

Point Rng::cube_point(std::size_t dim, double scale) {
  std::vector<double> c(dim);
  for (double& v : c) v = uniform(-scale, scale);
  return Point(std::move(c));
}

Point Rng::klein_point(const Space& klein, std::size_t dim, double frac) {
  const double r = klein.klein_r();
  for (;;) {
    std::vector<double> c(dim);
    for (double& v : c) v = uniform(-r, r);
    if (vec::norm2(c) <= frac * frac * r * r) return Point(std::move(c));
  }
}

Point Rng::point_in(const Space& s, std::size_t dim, double scale) {
  switch (s.kind()) {
    case SpaceKind::Euclidean:
      return cube_point(s.dim(), scale);
    case SpaceKind::KleinBall:
      return klein_point(s, dim);
    case SpaceKind::Finite:
      return Point::at_index(uniform_index(s.size()));
  }
  throw std::logic_error("unreachable");
}

PointList Rng::points_in(const Space& s, std::size_t n, std::size_t dim,
                         double scale) {
  PointList out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(point_in(s, dim, scale));
  return out;
}

PointList Rng::distinct_points(const Space& s, std::size_t n, std::size_t dim,
                               double scale, double min_sep) {
  PointList out;
  int attempts = 0;
  while (out.size() < n) {
    if (++attempts > 100000)
      throw std::runtime_error("could not sample distinct points");
    Point p = point_in(s, dim, scale);
    bool ok = true;
    for (const Point& q : out)
      if (s.dist(p, q) < min_sep) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace metra
