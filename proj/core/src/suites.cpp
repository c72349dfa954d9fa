#include "metra/suites.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "metra/ball.hpp"
#include "metra/chebyshev.hpp"
#include "metra/fixtures.hpp"
#include "metra/hausdorff.hpp"
#include "metra/hilbert.hpp"
#include "metra/maps.hpp"
#include "metra/nnet.hpp"
#include "metra/projection.hpp"
#include "metra/rng.hpp"
#include "metra/space.hpp"

namespace metra {
namespace {

void suite_spaces(Report& rep, Rng& rng, double tol) {
  const Space eu = Space::euclidean(2);
  const Space kb = Space::klein_ball(1.0, 1.0);
  for (const Space* sp : {&eu, &kb}) {
    double worst_tri = 0.0, worst_sym = 0.0;
    for (int it = 0; it < 300; ++it) {
      const Point a = rng.point_in(*sp, 2);
      const Point b = rng.point_in(*sp, 2);
      const Point c = rng.point_in(*sp, 2);
      worst_sym = std::max(worst_sym, std::abs(sp->dist(a, b) - sp->dist(b, a)));
      worst_tri =
          std::max(worst_tri, sp->dist(a, c) - sp->dist(a, b) - sp->dist(b, c));
    }
    const std::string tag = sp == &eu ? "euclidean" : "klein";
    rep.add("metric_symmetry_" + tag, worst_sym, 0.0, tol);
    rep.add("metric_triangle_" + tag, worst_tri, 0.0, tol);
  }
  double worst_add = 0.0, npc_fail = 0.0;
  for (int it = 0; it < 300; ++it) {
    const Point x = rng.point_in(kb, 2), y = rng.point_in(kb, 2),
                z = rng.point_in(kb, 2);
    const double lam = rng.uniform01();
    const Point m = kb.omega(x, y, lam);
    worst_add = std::max(
        worst_add, std::abs(kb.dist(x, m) + kb.dist(m, y) - kb.dist(x, y)));
    if (!busemann_nonpositive(kb, x, y, z, tol)) npc_fail += 1.0;
  }
  rep.add("klein_geodesic_additivity", worst_add, 0.0, tol);
  rep.add("klein_midpoint_contraction_failures", npc_fail, 0.0, 0.5);
}

void suite_hausdorff(Report& rep, Rng& rng, double tol) {
  const Space eu = Space::euclidean(2);
  double worst_tri = 0.0, worst_diam = 0.0, worst_half = 0.0;
  for (int it = 0; it < 60; ++it) {
    const PointList M = rng.points_in(eu, 3 + it % 4, 2);
    const PointList W = rng.points_in(eu, 3 + (it + 1) % 4, 2);
    const PointList T = rng.points_in(eu, 3, 2);
    worst_tri = std::max(worst_tri, deviation(eu, M, T) - deviation(eu, M, W) -
                                        deviation(eu, W, T));
    worst_diam = std::max(worst_diam, std::abs(diameter(eu, M) - diameter(eu, W)) -
                                          2.0 * hausdorff(eu, M, W));
    const PointList omega = midpoint_set(eu, M, W);
    const double a = hausdorff(eu, M, W);
    worst_half = std::max(worst_half,
                          std::abs(hausdorff(eu, M, omega) - a / 2.0));
    worst_half = std::max(worst_half,
                          std::abs(hausdorff(eu, omega, W) - a / 2.0));
  }
  rep.add("deviation_triangle", worst_tri, 0.0, tol);
  rep.add("diameter_vs_hausdorff", worst_diam, 0.0, tol);
  rep.add("midpoint_set_halving", worst_half, 0.0, 1e-9);
}

void suite_nnet(Report& rep, Rng& rng, double tol) {
  const Space eu = Space::euclidean(2);
  const double inf = std::numeric_limits<double>::infinity();
  double worst_star = 0.0, worst_interp = 0.0, worst_sym = 0.0;
  for (int it = 0; it < 40; ++it) {
    const int n = 2 + it % 4;
    const PointList S = rng.points_in(eu, n, 2);
    const PointList T = rng.points_in(eu, n, 2);
    const double p = it % 2 ? 2.0 : inf;
    const double ap = alpha_p(eu, S, T, p).cost;
    worst_star = std::max(worst_star, alpha_star(eu, S, T) - ap);
    worst_sym = std::max(worst_sym, std::abs(ap - alpha_p(eu, T, S, p).cost));
    const double lam = rng.uniform01();
    const PointList mid = nnet_interpolate(eu, S, T, p, lam);
    worst_interp = std::max(worst_interp,
                            std::abs(alpha_p(eu, S, mid, p).cost +
                                     alpha_p(eu, mid, T, p).cost - ap));
  }
  rep.add("support_metric_below_alpha_p", worst_star, 0.0, tol);
  rep.add("alpha_p_symmetry", worst_sym, 0.0, tol);
  rep.add("interpolation_additivity", worst_interp, 0.0, 1e-9);
}

void suite_chebyshev(Report& rep, Rng& rng, double tol) {
  const Space eu = Space::euclidean(2);
  const Space kb = Space::klein_ball(1.0, 1.0);
  double worst_chain = 0.0;
  for (int it = 0; it < 500; ++it) {
    const Space& sp = it % 2 ? kb : eu;
    const PointList S = rng.distinct_points(sp, 3 + it % 6, 2, 1.0, 1e-2);
    const NetClassification c = self_sets(sp, S);
    worst_chain = std::max({worst_chain, c.m - c.m1, c.m1 - c.R0, c.R0 - c.D});
  }
  rep.add("radius_chain", worst_chain, 0.0, tol);
  double worst_theta = 0.0, worst_bounds = 0.0;
  for (int it = 0; it < 40; ++it) {
    const PointList M = rng.points_in(eu, 4, 2), W = rng.points_in(eu, 4, 2);
    const PointList A = rng.points_in(eu, 4, 2), B = rng.points_in(eu, 4, 2);
    const double theta = std::max(relative_radius_centers(eu, M, W).radius,
                                  relative_radius_centers(eu, W, M).radius);
    worst_theta = std::max(worst_theta, hausdorff(eu, M, W) - theta);
    worst_theta = std::max(worst_theta, theta - cross_diameter(eu, M, W));
    const auto rb = radius_perturbation_bounds(eu, M, W, A, B);
    worst_bounds = std::max(worst_bounds, -std::min(rb.slack_deviation, rb.slack_alpha));
  }
  rep.add("theta_sandwich", worst_theta, 0.0, tol);
  rep.add("radius_perturbation_bounds", worst_bounds, 0.0, tol);
}

void suite_ball(Report& rep, Rng& rng, double tol) {
  const Space eu = Space::euclidean(2);
  double worst_id = 0.0, worst_lip = 0.0;
  for (int it = 0; it < 60; ++it) {
    const ConvexBody M = ConvexBody::hull(rng.points_in(eu, 5, 2));
    const Point x = rng.cube_point(2, 2.0), y = rng.cube_point(2, 2.0);
    worst_id = std::max(worst_id, std::abs(psi(eu, M, x) + r_fun(eu, M, x) -
                                           body_beta(eu, M, x)));
    const double d = eu.dist(x, y);
    worst_lip = std::max(worst_lip,
                         std::abs(psi(eu, M, x) - psi(eu, M, y)) - 1.5 * d);
    worst_lip = std::max(worst_lip,
                         std::abs(r_fun(eu, M, x) - r_fun(eu, M, y)) - 1.5 * d);
  }
  rep.add("psi_plus_r_identity", worst_id, 0.0, 1e-12);
  rep.add("psi_r_lipschitz_3_2", worst_lip, 0.0, tol);
  const Point a = rng.cube_point(2, 1.0), b = rng.cube_point(2, 1.0);
  const ConvexBody seg = ConvexBody::segment(a, b);
  const BallFit fit = best_ball(eu, seg);
  rep.add("segment_best_ball_radius",
          std::abs(fit.radius - eu.dist(a, b) / 4.0), 0.0, 1e-6);
  rep.add("segment_best_ball_center",
          eu.dist(fit.center, eu.omega(a, b, 0.5)), 0.0, 1e-6);
}

void suite_projection(Report& rep, Rng& rng, double tol) {
  const Space eu = Space::euclidean(2);
  double worst_ray = 0.0, worst_contract = 0.0, worst_lip = 0.0;
  for (int it = 0; it < 40; ++it) {
    const ConvexBody ball =
        ConvexBody::metric_ball(rng.cube_point(2, 0.5), 0.3 + rng.uniform01());
    const Point x = rng.cube_point(2, 3.0), y = rng.cube_point(2, 3.0);
    const Point px = project_convex(eu, ball, x);
    // ray invariance: points on (x, P(x)] project to the same point
    const Point z = eu.omega(x, px, 0.3 + 0.6 * rng.uniform01());
    worst_ray = std::max(worst_ray, eu.dist(project_convex(eu, ball, z), px));
    const Point py = project_convex(eu, ball, y);
    worst_lip = std::max(worst_lip, eu.dist(px, py) - eu.dist(x, y));
    const ConvexBody hull = ConvexBody::hull(rng.points_in(eu, 5, 2));
    const PointList W = rng.points_in(eu, 4, 2, 3.0);
    PointList PW;
    for (const Point& w : W) PW.push_back(project_convex(eu, hull, w));
    worst_contract = std::max(worst_contract, deviation(eu, hull.vertices, PW) -
                                                  deviation(eu, hull.vertices, W));
  }
  rep.add("projection_ray_invariance", worst_ray, 0.0, 1e-7);
  rep.add("ball_projection_nonexpansive", worst_lip, 0.0, 1e-9);
  rep.add("projection_deviation_contraction", worst_contract, 0.0, tol);
  // exact interval harness on a Klein segment
  const Space kb = Space::klein_ball(1.0, 1.0);
  const SampledConvexSet seg =
      segment_fixture(kb, Point{-0.5, -0.2}, Point{0.4, 0.5}, 20000);
  const Point x{0.1, -0.6};
  double worst = 0.0;
  for (const auto& r :
       ratio_monotonicity_check(kb, x, seg, 0.05, 0.1, 0.5, 0.1, 0.4, 1e-3))
    worst = std::max(worst, r.lhs - r.rhs);
  rep.add("delta_projection_ratio_monotonicity", worst, 0.0, 1e-3);
}

void suite_hilbert(Report& rep, Rng& rng, double tol) {
  const Space kb = Space::klein_ball(1.0, 1.0);
  const HilbertBall H{1.0, 1.0, 2.0};
  double worst_eq = 0.0, worst_mid = 0.0, worst_median = 0.0, worst_tan = 0.0;
  for (int it = 0; it < 60; ++it) {
    const Point x = rng.klein_point(kb, 2, 0.9), y = rng.klein_point(kb, 2, 0.9);
    worst_eq = std::max(worst_eq,
                        std::abs(hilbert_dist(H, x, y) - kb.dist(x, y)));
    if (kb.dist(x, y) > 1e-6) {
      const Point m = hilbert_midpoint(H, x, y);
      worst_mid = std::max(worst_mid, std::abs(kb.dist(x, m) - kb.dist(m, y)));
    }
    const Point z = rng.klein_point(kb, 2, 0.9);
    const MedianCheck mc = median_length(kb, z, x, y);
    worst_median = std::max(worst_median,
                            std::abs(mc.direct - mc.formula) /
                                std::max(1.0, std::abs(mc.formula)));
  }
  for (int it = 0; it < 10; ++it) {
    const Point x = rng.klein_point(kb, 2, 0.7), y = rng.klein_point(kb, 2, 0.7);
    const Point origin{0.0, 0.0};
    const double lim = tangent_norm(kb, origin, x, y, TangentMode::Limit).value;
    const double cf = tangent_norm(kb, origin, x, y, TangentMode::ClosedForm).value;
    worst_tan = std::max(worst_tan, std::abs(lim - cf));
  }
  rep.add("cross_ratio_equals_closed_form", worst_eq, 0.0, 1e-9);
  rep.add("hilbert_midpoint_halving", worst_mid, 0.0, 1e-9);
  rep.add("median_identity", worst_median, 0.0, 1e-9);
  rep.add("tangent_limit_vs_closed_form", worst_tan, 0.0, 1e-4);
  (void)tol;
}

void suite_maps(Report& rep, Rng& rng, double tol) {
  const Space X = Space::euclidean(2), Y = Space::euclidean(2);
  double worst_sw = 0.0, worst_sigma = 0.0;
  for (int it = 0; it < 40; ++it) {
    MapTable f, g;
    f.domain = rng.points_in(X, 6, 2);
    g.domain = f.domain;
    for (std::size_t i = 0; i < f.domain.size(); ++i) {
      f.values.push_back(rng.cube_point(2, 1.0));
      g.values.push_back(rng.cube_point(2, 1.0));
    }
    const Point p = f.domain[0], q = f.domain[1];
    const DeltaPSandwich sw = delta_p_equivalence_check(X, Y, f, g, p, q);
    worst_sw = std::max({worst_sw, sw.lower - sw.delta_q, sw.delta_q - sw.upper});
    // similarity composition through explicit plane similarities
    const double s1 = 0.5 + rng.uniform01(), s2 = 0.5 + rng.uniform01();
    const double a1 = rng.uniform(0.0, 6.28), a2 = rng.uniform(0.0, 6.28);
    auto apply = [](double sc, double ang, const Point& pt) {
      const double c = std::cos(ang), s = std::sin(ang);
      return Point{sc * (c * pt[0] - s * pt[1]), sc * (s * pt[0] + c * pt[1])};
    };
    MapTable fa, fb;
    fa.domain = f.domain;
    fb.domain = f.domain;
    for (const Point& pt : f.domain) {
      fa.values.push_back(apply(s1, a1, pt));
      fb.values.push_back(apply(s2, a2, apply(s1, a1, pt)));
    }
    const auto sa = similarity_coefficient(X, Y, fa);
    const auto sb = similarity_coefficient(X, Y, fb);
    if (sa && sb)
      worst_sigma = std::max(worst_sigma, std::abs(*sb - s2 * (*sa)));
    else
      worst_sigma = 1.0;
  }
  rep.add("delta_p_sandwich", worst_sw, 0.0, 1e-12);
  rep.add("similarity_multiplicative", worst_sigma, 0.0, 1e-9);
  (void)tol;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"spaces", "hausdorff", "nnet",      "chebyshev",
          "ball",   "projection", "hilbert",  "maps"};
}

Report run_suite(const std::string& name, std::uint64_t seed, double tol) {
  Report rep;
  rep.command = "suite " + name;
  Rng rng(seed);
  if (name == "spaces")
    suite_spaces(rep, rng, tol);
  else if (name == "hausdorff")
    suite_hausdorff(rep, rng, tol);
  else if (name == "nnet")
    suite_nnet(rep, rng, tol);
  else if (name == "chebyshev")
    suite_chebyshev(rep, rng, tol);
  else if (name == "ball")
    suite_ball(rep, rng, tol);
  else if (name == "projection")
    suite_projection(rep, rng, tol);
  else if (name == "hilbert")
    suite_hilbert(rep, rng, tol);
  else if (name == "maps")
    suite_maps(rep, rng, tol);
  else
    throw std::invalid_argument("unknown suite: " + name);
  return rep;
}

}  // namespace metra
