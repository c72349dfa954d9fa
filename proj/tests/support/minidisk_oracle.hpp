#pragma once

// Exact planar minimum enclosing circle by support enumeration: every optimal
// circle is determined by <= 3 points (a diametral pair or a circumscribed
// triple), so trying all of them and keeping the smallest enclosing candidate
// is exact. O(n^4); test-side oracle only.

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "metra/point.hpp"

namespace oracle {

struct Disk {
  double x = 0.0, y = 0.0, r = 0.0;
};

inline bool encloses(const Disk& d, const metra::PointList& pts, double tol) {
  for (const auto& p : pts)
    if (std::hypot(p[0] - d.x, p[1] - d.y) > d.r + tol) return false;
  return true;
}

inline std::optional<Disk> circumcircle(const metra::Point& a,
                                        const metra::Point& b,
                                        const metra::Point& c) {
  const double ax = a[0], ay = a[1], bx = b[0], by = b[1], cx = c[0], cy = c[1];
  const double det = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  if (std::abs(det) < 1e-14) return std::nullopt;
  const double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by,
               c2 = cx * cx + cy * cy;
  Disk d;
  d.x = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / det;
  d.y = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / det;
  d.r = std::hypot(ax - d.x, ay - d.y);
  return d;
}

inline Disk minidisk(const metra::PointList& pts, double tol = 1e-9) {
  Disk best;
  best.r = std::numeric_limits<double>::infinity();
  const std::size_t n = pts.size();
  if (n == 1) return {pts[0][0], pts[0][1], 0.0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Disk d{(pts[i][0] + pts[j][0]) / 2, (pts[i][1] + pts[j][1]) / 2, 0.0};
      d.r = std::hypot(pts[i][0] - d.x, pts[i][1] - d.y);
      if (d.r < best.r && encloses(d, pts, tol)) best = d;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto d = circumcircle(pts[i], pts[j], pts[k]);
        if (d && d->r < best.r && encloses(*d, pts, tol)) best = *d;
      }
  return best;
}

}  // namespace oracle
