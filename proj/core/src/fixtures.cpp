#include "metra/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace metra {
namespace {

constexpr double kTau = 6.283185307179586;

void require_2d(const Point& p) {
  if (p.dim() != 2) throw std::invalid_argument("fixture requires 2-D points");
}

}  // namespace

SampledConvexSet disk_fixture(const Space& s, const Point& c, double R,
                              const Point& x,
                              const std::vector<double>& thresholds,
                              int boundary_n, int interior_n) {
  (void)s;  // euclidean-only builder; kept for signature symmetry
  require_2d(c);
  SampledConvexSet out;
  auto inside = [&](double px, double py) {
    return std::hypot(px - c[0], py - c[1]) <= R + 1e-15;
  };
  // disk boundary
  for (int i = 0; i < boundary_n; ++i) {
    const double a = kTau * i / boundary_n;
    out.pts.push_back(Point{c[0] + R * std::cos(a), c[1] + R * std::sin(a)});
  }
  // interior grid (coarse; extremal behavior lives on the curves)
  for (int i = 0; i < interior_n; ++i)
    for (int j = 0; j < interior_n; ++j) {
      const double px = c[0] + R * (2.0 * (i + 0.5) / interior_n - 1.0);
      const double py = c[1] + R * (2.0 * (j + 0.5) / interior_n - 1.0);
      if (inside(px, py)) out.pts.push_back(Point{px, py});
    }
  // spheres around x at dist(x, disk) + threshold, clipped to the disk
  const double base = std::max(0.0, std::hypot(x[0] - c[0], x[1] - c[1]) - R);
  for (double th : thresholds) {
    const double rad = base + th;
    if (rad <= 0.0) continue;
    const int n = boundary_n;
    for (int i = 0; i < n; ++i) {
      const double a = kTau * i / n;
      const double px = x[0] + rad * std::cos(a);
      const double py = x[1] + rad * std::sin(a);
      if (inside(px, py)) out.pts.push_back(Point{px, py});
    }
  }
  out.mesh = std::max(kTau * R / boundary_n, 2.0 * R / interior_n * 0.2);
  return out;
}

SampledConvexSet halfdisk_fixture(const Space& s, const Point& c, double R,
                                  const std::vector<double>& normal,
                                  const Point& x,
                                  const std::vector<double>& thresholds,
                                  int boundary_n, int interior_n) {
  (void)s;
  require_2d(c);
  const double nn = std::hypot(normal[0], normal[1]);
  const double nx = normal[0] / nn, ny = normal[1] / nn;
  auto inside = [&](double px, double py) {
    if (std::hypot(px - c[0], py - c[1]) > R + 1e-15) return false;
    return (px - c[0]) * nx + (py - c[1]) * ny <= 1e-15;
  };
  SampledConvexSet out;
  for (int i = 0; i < boundary_n; ++i) {
    const double a = kTau * i / boundary_n;
    const double px = c[0] + R * std::cos(a), py = c[1] + R * std::sin(a);
    if (inside(px, py)) out.pts.push_back(Point{px, py});
  }
  // flat edge: the diameter perpendicular to the normal
  for (int i = 0; i <= boundary_n / 2; ++i) {
    const double t = -R + 2.0 * R * i / (boundary_n / 2);
    out.pts.push_back(Point{c[0] - ny * t, c[1] + nx * t});
  }
  for (int i = 0; i < interior_n; ++i)
    for (int j = 0; j < interior_n; ++j) {
      const double px = c[0] + R * (2.0 * (i + 0.5) / interior_n - 1.0);
      const double py = c[1] + R * (2.0 * (j + 0.5) / interior_n - 1.0);
      if (inside(px, py)) out.pts.push_back(Point{px, py});
    }
  double base = std::numeric_limits<double>::infinity();
  for (const Point& p : out.pts)
    base = std::min(base, std::hypot(x[0] - p[0], x[1] - p[1]));
  for (double th : thresholds) {
    const double rad = base + th;
    if (rad <= 0.0) continue;
    for (int i = 0; i < boundary_n; ++i) {
      const double a = kTau * i / boundary_n;
      const double px = x[0] + rad * std::cos(a);
      const double py = x[1] + rad * std::sin(a);
      if (inside(px, py)) out.pts.push_back(Point{px, py});
    }
  }
  out.mesh = std::max(kTau * R / boundary_n, 2.0 * R / interior_n * 0.2);
  return out;
}

SampledConvexSet klein_cap_fixture(const Space& klein, const Point& c, double R,
                                   const Point& x,
                                   const std::vector<double>& thresholds,
                                   int boundary_n, int rings) {
  if (klein.kind() != SpaceKind::KleinBall)
    throw std::invalid_argument("klein_cap_fixture requires a Klein space");
  require_2d(c);
  SampledConvexSet out;
  // geodesic circles around the cap center: shoot a chord from c in every
  // model direction and walk the metric distance along it
  auto shell_point = [&](const Point& from, double ang, double rad) {
    // small model-space step that stays inside the ball, rescaled to the
    // requested metric radius along the chord
    const double margin =
        1e-3 * (klein.klein_r() - std::hypot(from[0], from[1]));
    const Point dir{from[0] + margin * std::cos(ang),
                    from[1] + margin * std::sin(ang)};
    const double d = klein.dist(from, dir);
    return klein.omega(from, dir, rad / d);
  };
  for (int ring = 1; ring <= rings; ++ring) {
    const double rad = R * ring / rings;
    const int n = ring == rings ? boundary_n : std::max(16, boundary_n / 4);
    for (int i = 0; i < n; ++i)
      out.pts.push_back(shell_point(c, kTau * i / n, rad));
  }
  out.pts.push_back(c);
  // shells around x clipped to the cap
  double base = std::numeric_limits<double>::infinity();
  for (const Point& p : out.pts) base = std::min(base, klein.dist(x, p));
  for (double th : thresholds) {
    const double rad = base + th;
    if (rad <= 0.0) continue;
    for (int i = 0; i < boundary_n; ++i) {
      const Point p = shell_point(x, kTau * i / boundary_n, rad);
      if (klein.dist(c, p) <= R + 1e-12) out.pts.push_back(p);
    }
  }
  out.mesh = std::max(kTau * R / boundary_n, R / rings * 0.5);
  return out;
}

SampledConvexSet segment_fixture(const Space& s, const Point& a, const Point& b,
                                 int n) {
  SampledConvexSet out;
  out.pts.reserve(n + 1);
  out.arc.reserve(n + 1);
  const double len = s.dist(a, b);
  for (int i = 0; i <= n; ++i) {
    const double f = static_cast<double>(i) / n;
    out.pts.push_back(s.omega(a, b, f));
    out.arc.push_back(f * len);
  }
  out.mesh = len / n;
  return out;
}

}  // namespace metra
