#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "metra/ball.hpp"
#include "metra/hausdorff.hpp"
#include "metra/rng.hpp"

using namespace metra;

namespace {

constexpr double kTau = 6.283185307179586;

// dense boundary sampler for the interior-distance oracle; expects vertices
// listed in convex position and boundary order, so the polygon boundary is
// the union of adjacent edges
double codist_oracle(const Space& s, const PointList& v, const Point& x,
                     int per_edge = 4000) {
  double best = 1e300;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    for (int t = 0; t <= per_edge; ++t)
      best = std::min(
          best, s.dist(x, s.omega(a, b, static_cast<double>(t) / per_edge)));
  }
  return best;
}

// vertices in convex position (jittered circle), in boundary order
PointList convex_polygon(metra::Rng& rng, int n, double radius) {
  PointList out;
  for (int i = 0; i < n; ++i) {
    const double a = kTau * (i + 0.3 * rng.uniform01()) / n;
    const double r = radius * (0.8 + 0.2 * rng.uniform01());
    out.push_back(Point{r * std::cos(a), r * std::sin(a)});
  }
  return out;
}

// beta(B[x,r], M) by sampling the sphere of the ball (2-D); the farthest
// point of a ball from a convex set lies on the sphere
double ball_dev_oracle(const Space& s, const ConvexBody& M, const Point& x,
                       double r, int n = 20000) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = kTau * i / n;
    const Point z{x[0] + r * std::cos(a), x[1] + r * std::sin(a)};
    worst = std::max(worst, body_dist(s, M, z));
  }
  return worst;
}

}  // namespace

TEST_CASE("psi and r: exterior point and the half-sum identity") {
  const Space eu = Space::euclidean(2);
  const ConvexBody hull =
      ConvexBody::hull({Point{0, 0}, Point{2, 0}, Point{2, 1}, Point{0, 1}});
  const Point outside{5, 0.5};
  const double beta = body_beta(eu, hull, outside);
  const double d = body_dist(eu, hull, outside);
  CHECK(body_codist(eu, hull, outside) == 0.0);
  CHECK(psi(eu, hull, outside) == doctest::Approx((beta + d) / 2).epsilon(1e-14));
  CHECK(r_fun(eu, hull, outside) == doctest::Approx((beta - d) / 2).epsilon(1e-14));
  Rng rng(113);
  for (int it = 0; it < 200; ++it) {
    const Point x = rng.cube_point(2, 3.0);
    CHECK(psi(eu, hull, x) + r_fun(eu, hull, x) ==
          doctest::Approx(body_beta(eu, hull, x)).epsilon(1e-14));
  }
}

TEST_CASE("unit segment: psi at the midpoint is a quarter") {
  const Space eu = Space::euclidean(2);
  const ConvexBody seg = ConvexBody::segment(Point{0, 0}, Point{1, 0});
  const Point mid{0.5, 0.0};
  CHECK(psi(eu, seg, mid) == doctest::Approx(0.25));
  CHECK(r_fun(eu, seg, mid) == doctest::Approx(0.25));
}

TEST_CASE("interior complement distance matches the boundary sampler") {
  const Space eu = Space::euclidean(2);
  Rng rng(127);
  for (int it = 0; it < 5; ++it) {
    const PointList verts = convex_polygon(rng, 6, 1.5);
    const ConvexBody hull = ConvexBody::hull(verts);
    for (int probe = 0; probe < 10; ++probe) {
      const Point x = rng.cube_point(2, 1.0);
      const double cd = body_codist(eu, hull, x);
      if (cd < 5e-3) continue;  // outside or too close for the sampler
      CHECK(cd == doctest::Approx(codist_oracle(eu, verts, x)).epsilon(1e-6));
    }
  }
}

TEST_CASE("closed form: deviation of the set from a ball") {
  const Space eu = Space::euclidean(2);
  const ConvexBody hull =
      ConvexBody::hull({Point{0, 0}, Point{1, 0}, Point{0.5, 1}});
  const Point x{0.4, 0.3};
  const double beta = body_beta(eu, hull, x);
  CHECK(ball_deviation_from_set(eu, hull, x, beta + 0.5) == 0.0);
  CHECK(ball_deviation_from_set(eu, hull, x, 0.0) == doctest::Approx(beta));
  Rng rng(131);
  for (int it = 0; it < 40; ++it) {
    const Point y = rng.cube_point(2, 2.0);
    const double r = rng.uniform01();
    // oracle: max over sampled ball of distance-to-nearest-vertex... the
    // farthest vertex realizes it, so compare against the vertex loop
    double direct = 0.0;
    for (const Point& v : hull.vertices)
      direct = std::max(direct, std::max(0.0, eu.dist(y, v) - r));
    CHECK(ball_deviation_from_set(eu, hull, y, r) ==
          doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("closed form: deviation of a ball from the set, exterior center") {
  const Space eu = Space::euclidean(2);
  const ConvexBody disk = ConvexBody::metric_ball(Point{0, 0}, 1.0);
  const Point x{3, 0};
  for (double r : {0.0, 0.5, 2.0}) {
    const double expected = r + 2.0;  // dist(x, disk) = 2
    CHECK(set_deviation_from_ball(eu, disk, x, r) == doctest::Approx(expected));
    CHECK(ball_dev_oracle(eu, disk, x, r) == doctest::Approx(expected).epsilon(1e-4));
  }
  // interior center: the closed form is an upper bound for the sampled value
  const Point inside{0.2, 0.1};
  for (double r : {0.1, 0.6, 1.5}) {
    const double bound = set_deviation_from_ball(eu, disk, inside, r);
    CHECK(ball_dev_oracle(eu, disk, inside, r) <= bound + 1e-4);
  }
}

TEST_CASE("ball hausdorff closed form and its minimizing radius") {
  const Space eu = Space::euclidean(2);
  const ConvexBody hull =
      ConvexBody::hull({Point{0, 0}, Point{2, 0}, Point{2, 2}, Point{0, 2}});
  const Point x{4, 1};
  // ternary search over r reproduces r(M,x) and the value psi(M,x)
  double lo = 0.0, hi = 10.0;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (ball_hausdorff(eu, hull, x, m1) <= ball_hausdorff(eu, hull, x, m2))
      hi = m2;
    else
      lo = m1;
  }
  const double rstar = 0.5 * (lo + hi);
  CHECK(rstar == doctest::Approx(r_fun(eu, hull, x)).epsilon(1e-9));
  CHECK(ball_hausdorff(eu, hull, x, rstar) ==
        doctest::Approx(psi(eu, hull, x)).epsilon(1e-9));
}

TEST_CASE("lipschitz 3/2 and the D/2 caps") {
  const Space eu = Space::euclidean(2);
  Rng rng(137);
  for (int it = 0; it < 30; ++it) {
    const ConvexBody hull = ConvexBody::hull(rng.points_in(eu, 5, 2));
    const double D = body_diameter(eu, hull);
    for (int probe = 0; probe < 20; ++probe) {
      const Point x = rng.cube_point(2, 2.0), y = rng.cube_point(2, 2.0);
      const double d = eu.dist(x, y);
      CHECK(std::abs(psi(eu, hull, x) - psi(eu, hull, y)) <= 1.5 * d + 1e-12);
      CHECK(std::abs(r_fun(eu, hull, x) - r_fun(eu, hull, y)) <= 1.5 * d + 1e-12);
      CHECK(r_fun(eu, hull, x) <= D / 2 + 1e-12);
      if (body_codist(eu, hull, x) > 0.0)  // interior point
        CHECK(psi(eu, hull, x) <= D / 2 + 1e-12);
    }
  }
}

TEST_CASE("best ball of a segment: midpoint center, quarter radius") {
  const Space eu = Space::euclidean(2);
  const Space kb = Space::klein_ball(1.0, 1.0);
  SUBCASE("euclidean") {
    const Point a{0.1, -0.3}, b{1.3, 0.9};
    const BallFit fit = best_ball(eu, ConvexBody::segment(a, b), 1e-8);
    CHECK(eu.dist(fit.center, eu.omega(a, b, 0.5)) <= 1e-6);
    CHECK(fit.radius == doctest::Approx(eu.dist(a, b) / 4).epsilon(1e-6));
    CHECK(fit.hausdorff_value == doctest::Approx(eu.dist(a, b) / 4).epsilon(1e-6));
  }
  SUBCASE("klein") {
    const Point a{0.5, 0.2}, b{-0.4, -0.1};
    const BallFit fit = best_ball(kb, ConvexBody::segment(a, b), 1e-8);
    CHECK(kb.dist(fit.center, kb.omega(a, b, 0.5)) <= 1e-6);
    CHECK(fit.radius == doctest::Approx(kb.dist(a, b) / 4).epsilon(1e-6));
  }
}

TEST_CASE("best ball of a metric ball is itself") {
  const Space eu = Space::euclidean(2);
  const ConvexBody disk = ConvexBody::metric_ball(Point{0.3, -0.2}, 0.7);
  const BallFit fit = best_ball(eu, disk);
  CHECK(fit.hausdorff_value == 0.0);
  CHECK(eu.dist(fit.center, disk.center) == 0.0);
  CHECK(fit.radius == doctest::Approx(disk.radius));
}

TEST_CASE("best ball of planar hulls vs the dense grid oracle") {
  const Space eu = Space::euclidean(2);
  Rng rng(139);
  for (int it = 0; it < 4; ++it) {
    const ConvexBody hull = ConvexBody::hull(rng.points_in(eu, 6, 2));
    const BallFit fit = best_ball(eu, hull, 1e-8);
    // oracle: dense grid over the hull, radius by the half-deviation rule
    double best = 1e300;
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const Point& v : hull.vertices) {
      xlo = std::min(xlo, v[0]);
      xhi = std::max(xhi, v[0]);
      ylo = std::min(ylo, v[1]);
      yhi = std::max(yhi, v[1]);
    }
    const int g = 300;
    double bx = xlo, by = ylo;
    for (int i = 0; i <= g; ++i)
      for (int j = 0; j <= g; ++j) {
        const Point z{xlo + (xhi - xlo) * i / g, ylo + (yhi - ylo) * j / g};
        const double v = psi(eu, hull, z);
        if (v < best) {
          best = v;
          bx = z[0];
          by = z[1];
        }
      }
    // refine around the coarse argmin
    const double hx = 2.0 * (xhi - xlo) / g, hy = 2.0 * (yhi - ylo) / g;
    for (int i = 0; i <= g; ++i)
      for (int j = 0; j <= g; ++j) {
        const Point z{bx - hx + 2 * hx * i / g, by - hy + 2 * hy * j / g};
        best = std::min(best, psi(eu, hull, z));
      }
    CHECK(fit.hausdorff_value <= best + 1e-9);
    CHECK(fit.hausdorff_value == doctest::Approx(best).epsilon(1e-4));
    // the optimal center lies in the body
    CHECK(body_dist(eu, hull, fit.center) <= 1e-6);
    // equality of the fit value with the sampled two-sided hausdorff distance
    // between the fitted ball and the body (planar convex case)
    double sampled = 0.0;
    for (int t = 0; t < 20000; ++t) {
      const double a = kTau * t / 20000;
      sampled = std::max(
          sampled, body_dist(eu, hull, Point{fit.center[0] + fit.radius * std::cos(a),
                                             fit.center[1] + fit.radius * std::sin(a)}));
    }
    for (const Point& v : hull.vertices)
      sampled = std::max(sampled,
                         std::max(0.0, eu.dist(v, fit.center) - fit.radius));
    CHECK(sampled == doctest::Approx(fit.hausdorff_value).epsilon(1e-3));
  }
}

TEST_CASE("best-ball stability along shrinking families") {
  const Space eu = Space::euclidean(2);
  const Point a{0, 0}, b{2, 0};
  const ConvexBody limit = ConvexBody::segment(a, b);
  std::vector<ConvexBody> family;
  for (int n = 1; n <= 6; ++n)
    family.push_back(
        ConvexBody::segment(Point{0.0, 1.0 / (n * n)}, Point{2.0, 1.0 / (n * n)}));
  const auto rows = best_ball_stability(eu, family, limit);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].center_gap <= rows[i - 1].center_gap + 1e-9);
  CHECK(rows.back().center_gap <= 0.05);
  // constant family: gap identically zero
  const auto constant = best_ball_stability(eu, {limit, limit}, limit);
  for (const auto& r : constant) CHECK(r.center_gap <= 1e-9);
}
