#include <cmath>
#include <functional>

#include "doctest.h"
#include "metra/maps.hpp"
#include "metra/rng.hpp"

using namespace metra;

namespace {

MapTable table_of(const PointList& domain,
                  const std::function<Point(const Point&)>& f) {
  MapTable t;
  t.domain = domain;
  for (const Point& p : domain) t.values.push_back(f(p));
  return t;
}

Point rotate_scale(double sc, double ang, const Point& p) {
  const double c = std::cos(ang), s = std::sin(ang);
  return Point{sc * (c * p[0] - s * p[1]), sc * (s * p[0] + c * p[1])};
}

}  // namespace

TEST_CASE("weighted-sup metric basics") {
  const Space X = Space::euclidean(2), Y = Space::euclidean(2);
  Rng rng(221);
  const PointList dom = rng.points_in(X, 6, 2);
  const MapTable f = table_of(dom, [](const Point& p) { return p; });
  CHECK(busemann_delta_p(X, Y, f, f, dom[0]) == 0.0);

  // constant maps on a domain containing p: the p-term dominates, value d(u,v)
  const Point u{1, 2}, v{3, -1};
  const MapTable fu = table_of(dom, [&](const Point&) { return u; });
  const MapTable fv = table_of(dom, [&](const Point&) { return v; });
  CHECK(busemann_delta_p(X, Y, fu, fv, dom[2]) == doctest::Approx(X.dist(u, v)));

  // random tables against the direct loop
  for (int it = 0; it < 30; ++it) {
    MapTable g = f, h = f;
    g.values = rng.points_in(Y, 6, 2);
    h.values = rng.points_in(Y, 6, 2);
    const Point p = rng.cube_point(2, 1.0);
    double expect = 0.0;
    for (std::size_t i = 0; i < dom.size(); ++i)
      expect = std::max(expect, Y.dist(g.values[i], h.values[i]) *
                                    std::exp(-X.dist(p, dom[i])));
    CHECK(busemann_delta_p(X, Y, g, h, p) == doctest::Approx(expect));
  }
  CHECK_THROWS(busemann_delta_p(X, Y, f, table_of({dom[0]}, [](const Point& p) {
                                  return p;
                                }),
                                dom[0]));
}

TEST_CASE("base-point equivalence sandwich is exact") {
  const Space X = Space::euclidean(2), Y = Space::euclidean(2);
  Rng rng(223);
  for (int it = 0; it < 100; ++it) {
    const PointList dom = rng.points_in(X, 7, 2, 2.0);
    MapTable f, g;
    f.domain = g.domain = dom;
    f.values = rng.points_in(Y, 7, 2);
    g.values = rng.points_in(Y, 7, 2);
    // p = q: equalities
    const auto same = delta_p_equivalence_check(X, Y, f, g, dom[0], dom[0]);
    CHECK(same.delta_q == doctest::Approx(same.delta_p));
    // far-apart base points still satisfy the sandwich
    const Point p = rng.cube_point(2, 4.0), q = rng.cube_point(2, 4.0);
    const auto sw = delta_p_equivalence_check(X, Y, f, g, p, q);
    CHECK(sw.ok);
    CHECK(sw.lower <= sw.delta_q + 1e-12);
    CHECK(sw.delta_q <= sw.upper + 1e-12);
  }
}

TEST_CASE("truncated ball-restricted series") {
  const Space X = Space::euclidean(2), Y = Space::euclidean(2);
  Rng rng(227);
  const PointList dom = rng.points_in(X, 8, 2, 1.0);
  MapTable f, g;
  f.domain = g.domain = dom;
  f.values = rng.points_in(Y, 8, 2);
  g.values = rng.points_in(Y, 8, 2);
  const Point center{0, 0};
  CHECK(kuratowski_delta(X, Y, f, f, center, {1.0, 2.0}).value == 0.0);

  // single ball covering the whole domain: value d1 / (2 (1 + d1))
  double d1 = 0.0;
  for (std::size_t i = 0; i < dom.size(); ++i)
    d1 = std::max(d1, Y.dist(f.values[i], g.values[i]));
  const auto one = kuratowski_delta(X, Y, f, g, center, {100.0});
  CHECK(one.value == doctest::Approx(d1 / (2.0 * (1.0 + d1))));
  CHECK(one.tail_bound == doctest::Approx(0.5));

  // partial-sum oracle over several radii
  const std::vector<double> radii{0.5, 1.0, 1.5, 2.0};
  const auto got = kuratowski_delta(X, Y, f, g, center, radii);
  double expect = 0.0, w = 1.0;
  for (double r : radii) {
    w *= 0.5;
    double di = 0.0;
    for (std::size_t i = 0; i < dom.size(); ++i)
      if (X.dist(center, dom[i]) <= r)
        di = std::max(di, Y.dist(f.values[i], g.values[i]));
    expect += w * di / (1.0 + di);
  }
  CHECK(got.value == doctest::Approx(expect));
  CHECK(got.tail_bound == doctest::Approx(w));
  CHECK_THROWS(kuratowski_delta(X, Y, f, g, center, {2.0, 1.0}));
}

TEST_CASE("hoelder membership") {
  const Space X = Space::euclidean(2), Y = Space::euclidean(2);
  Rng rng(229);
  const PointList dom = rng.points_in(X, 6, 2);
  const MapTable constant =
      table_of(dom, [](const Point&) { return Point{1, 1}; });
  CHECK(holder_membership(X, Y, constant, 0.0, 1.0));
  const MapTable identity = table_of(dom, [](const Point& p) { return p; });
  CHECK(holder_membership(X, Y, identity, 1.0, 1.0));
  const MapTable doubled = table_of(dom, [](const Point& p) {
    return Point{2 * p[0], 2 * p[1]};
  });
  CHECK(!holder_membership(X, Y, doubled, 1.5, 1.0));
  CHECK(holder_membership(X, Y, doubled, 2.0, 1.0));
  CHECK_THROWS(holder_membership(X, Y, identity, 1.0, 1.5));
}

TEST_CASE("hoelder class is closed under pointwise limits (finite domain)") {
  const Space X = Space::euclidean(2), Y = Space::euclidean(2);
  Rng rng(233);
  const PointList dom = rng.points_in(X, 5, 2);
  const double B = 1.0, alpha = 0.5;
  // members f_n -> f pointwise implies f is a member
  auto fn = [&](int n, const Point& p) {
    const double wobble = 1.0 / (n + 1.0);
    return Point{0.5 * std::sqrt(std::abs(p[0])) + wobble * 0.01, 0.0};
  };
  MapTable limit;
  limit.domain = dom;
  for (const Point& p : dom)
    limit.values.push_back(Point{0.5 * std::sqrt(std::abs(p[0])), 0.0});
  for (int n = 1; n <= 5; ++n) {
    MapTable t;
    t.domain = dom;
    for (const Point& p : dom) t.values.push_back(fn(n, p));
    CHECK(holder_membership(X, Y, t, B, alpha, 1e-2));
  }
  CHECK(holder_membership(X, Y, limit, B, alpha, 1e-2));
}

TEST_CASE("similarity detection and group laws") {
  const Space X = Space::euclidean(2), Y = Space::euclidean(2);
  Rng rng(239);
  const PointList dom = rng.points_in(X, 6, 2);
  const MapTable identity = table_of(dom, [](const Point& p) { return p; });
  CHECK(similarity_coefficient(X, Y, identity) == doctest::Approx(1.0));
  const MapTable doubled = table_of(dom, [](const Point& p) {
    return Point{2 * p[0], 2 * p[1]};
  });
  CHECK(similarity_coefficient(X, Y, doubled) == doctest::Approx(2.0));
  const MapTable skew = table_of(dom, [](const Point& p) {
    return Point{p[0] + 0.3 * p[1] * p[1], p[1]};
  });
  CHECK(!similarity_coefficient(X, Y, skew).has_value());

  for (int it = 0; it < 50; ++it) {
    const double s1 = 0.3 + 2.0 * rng.uniform01(), a1 = rng.uniform(0, 6.28);
    const double s2 = 0.3 + 2.0 * rng.uniform01(), a2 = rng.uniform(0, 6.28);
    const MapTable f =
        table_of(dom, [&](const Point& p) { return rotate_scale(s1, a1, p); });
    const MapTable comp = table_of(dom, [&](const Point& p) {
      return rotate_scale(s2, a2, rotate_scale(s1, a1, p));
    });
    const MapTable inv =
        table_of(dom, [&](const Point& p) { return rotate_scale(1.0 / s1, -a1, p); });
    CHECK(*similarity_coefficient(X, Y, f) == doctest::Approx(s1));
    CHECK(*similarity_coefficient(X, Y, comp) == doctest::Approx(s1 * s2));
    CHECK(*similarity_coefficient(X, Y, inv) == doctest::Approx(1.0 / s1));
  }
}

TEST_CASE("weighted-sup metric axioms are exact on finite domains") {
  const Space X = Space::euclidean(2), Y = Space::euclidean(2);
  Rng rng(421);
  const PointList dom = rng.points_in(X, 6, 2);
  auto random_table = [&]() {
    MapTable t;
    t.domain = dom;
    t.values = rng.points_in(Y, 6, 2);
    return t;
  };
  for (int it = 0; it < 60; ++it) {
    const MapTable f = random_table(), g = random_table(), h = random_table();
    const Point p = rng.cube_point(2, 1.0);
    const double fg = busemann_delta_p(X, Y, f, g, p);
    CHECK(fg == doctest::Approx(busemann_delta_p(X, Y, g, f, p)));
    CHECK(fg >= 0.0);
    CHECK(busemann_delta_p(X, Y, f, f, p) == 0.0);
    CHECK(busemann_delta_p(X, Y, f, h, p) <=
          fg + busemann_delta_p(X, Y, g, h, p) + 1e-12);
  }
}
