#include "metra/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

#include "metra/ball.hpp"
#include "metra/hausdorff.hpp"
#include "metra/rng.hpp"

namespace metra {
namespace {

double beta_point(const Space& s, const PointList& M, const Point& x) {
  double worst = 0.0;
  for (const Point& m : M) worst = std::max(worst, s.dist(x, m));
  return worst;
}

std::size_t farthest_index(const Space& s, const PointList& M, const Point& x) {
  std::size_t idx = 0;
  double worst = -1.0;
  for (std::size_t i = 0; i < M.size(); ++i) {
    const double d = s.dist(x, M[i]);
    if (d > worst) {
      worst = d;
      idx = i;
    }
  }
  return idx;
}

// Circumcenter of 2 or 3 affinely independent points in Euclidean coordinates
// (equidistant point in their affine hull). Returns nullopt when degenerate.
std::optional<Point> equidistant_point(const PointList& pts) {
  const std::size_t k = pts.size();
  if (k < 2 || k > 3) return std::nullopt;
  const auto& a = pts[0].coords();
  const std::size_t dim = a.size();
  if (k == 2) return Point(vec::lerp(a, pts[1].coords(), 0.5));
  // solve for center = a + s*u + t*v on the perpendicular bisectors
  const std::vector<double> u = vec::sub(pts[1].coords(), a);
  const std::vector<double> v = vec::sub(pts[2].coords(), a);
  const double uu = vec::dot(u, u), vv = vec::dot(v, v), uv = vec::dot(u, v);
  const double det = uu * vv - uv * uv;
  const double scale = uu * vv;
  if (scale == 0.0 || std::abs(det) < 1e-12 * scale) return std::nullopt;
  const double bu = uu / 2.0, bv = vv / 2.0;
  const double sc = (bu * vv - bv * uv) / det;
  const double tc = (bv * uu - bu * uv) / det;
  std::vector<double> c(dim);
  for (std::size_t i = 0; i < dim; ++i) c[i] = a[i] + sc * u[i] + tc * v[i];
  return Point(std::move(c));
}

// minimax center of at most three points: the midpoint of the longest pair
// when its ball already covers the triple, else the circumcenter
std::pair<Point, double> support_center(const Space& s, const PointList& pts) {
  if (pts.size() == 1) return {pts[0], 0.0};
  if (pts.size() == 2) {
    const Point mid = s.omega(pts[0], pts[1], 0.5);
    return {mid, beta_point(s, pts, mid)};
  }
  Point best = pts[0];
  double rbest = std::numeric_limits<double>::infinity();
  for (int drop = 0; drop < 3; ++drop) {
    PointList pair;
    for (int i = 0; i < 3; ++i)
      if (i != drop) pair.push_back(pts[i]);
    const Point mid = s.omega(pair[0], pair[1], 0.5);
    const double r = beta_point(s, pts, mid);
    if (r <= s.dist(pair[0], pair[1]) / 2.0 + 1e-12 && r < rbest) {
      rbest = r;
      best = mid;
    }
  }
  const auto cc = equidistant_point(pts);
  if (cc) {
    const double r = beta_point(s, pts, *cc);
    if (r < rbest) {
      rbest = r;
      best = *cc;
    }
  }
  return {best, rbest};
}

// Active-set exchange for the Euclidean case: keep a support of at most three
// points, recenter on it, and swap in the farthest violator. The support
// radius grows strictly, so the exchange terminates; the final center is the
// exact minimax point.
void euclidean_polish(const Space& s, const PointList& M, Point& x, double& fx) {
  if (s.kind() != SpaceKind::Euclidean) return;
  PointList support = {M[farthest_index(s, M, x)]};
  support.push_back(M[farthest_index(s, M, support[0])]);
  Point center = x;
  for (int round = 0; round < 200; ++round) {
    auto [c, r] = support_center(s, support);
    const std::size_t fi = farthest_index(s, M, c);
    const double f = s.dist(c, M[fi]);
    if (f <= r + 1e-12 * (1.0 + r)) {
      center = c;
      break;
    }
    // choose the best support of size <= 3 among subsets of support + violator
    PointList pool = support;
    pool.push_back(M[fi]);
    double best_r = std::numeric_limits<double>::infinity();
    PointList best_support;
    const std::size_t m = pool.size();
    for (std::size_t mask = 1; mask < (1u << m); ++mask) {
      if (!(mask & (1u << (m - 1)))) continue;  // must keep the violator
      PointList sub;
      for (std::size_t b = 0; b < m; ++b)
        if (mask & (1u << b)) sub.push_back(pool[b]);
      if (sub.size() > 3) continue;
      auto [cc, rr] = support_center(s, sub);
      if (beta_point(s, pool, cc) <= rr + 1e-12 * (1.0 + rr) && rr < best_r) {
        best_r = rr;
        best_support = sub;
      }
    }
    if (best_support.empty()) break;
    support = best_support;
    center = support_center(s, support).first;
  }
  const double f = beta_point(s, M, center);
  if (f < fx) {
    x = center;
    fx = f;
  }
}

}  // namespace

CenterResult relative_radius_centers(const Space& s, const PointList& M,
                                     const PointList& W, double tol) {
  if (M.empty() || W.empty()) throw std::invalid_argument("empty point set");
  CenterResult res;
  res.radius = std::numeric_limits<double>::infinity();
  std::vector<double> b(W.size());
  for (std::size_t i = 0; i < W.size(); ++i) {
    b[i] = beta_point(s, M, W[i]);
    res.radius = std::min(res.radius, b[i]);
  }
  for (std::size_t i = 0; i < W.size(); ++i)
    if (b[i] <= res.radius + tol) res.centers.push_back(W[i]);
  res.residual = tol;
  return res;
}

NetClassification self_sets(const Space& s, const PointList& S, double tol) {
  const std::size_t n = S.size();
  if (n == 0) throw std::invalid_argument("empty net");
  if (!points_distinct(s, S))
    throw std::invalid_argument("net points must be distinct");
  NetClassification r;
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = s.dist(S[i], S[j]);

  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  std::vector<double> beta(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        nearest[i] = std::min(nearest[i], d[i][j]);
        beta[i] = std::max(beta[i], d[i][j]);
        r.D = std::max(r.D, d[i][j]);
      }
  if (n == 1) {
    nearest[0] = 0.0;
    r.m = r.m1 = r.D = r.R0 = 0.0;
    r.h = r.h1 = r.Z0 = r.H = r.Q0 = S;
    r.in_d0 = true;
    r.Z0_cardinality = 1;
    return r;
  }
  r.m = *std::min_element(nearest.begin(), nearest.end());
  r.m1 = *std::max_element(nearest.begin(), nearest.end());
  r.R0 = *std::min_element(beta.begin(), beta.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (nearest[i] <= r.m + tol) r.h.push_back(S[i]);
    if (nearest[i] >= r.m1 - tol) r.h1.push_back(S[i]);
    if (beta[i] <= r.R0 + tol) r.Z0.push_back(S[i]);
    if (beta[i] >= r.D - tol) r.H.push_back(S[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    double bz = 0.0;
    for (const Point& z : r.Z0) bz = std::max(bz, s.dist(z, S[i]));
    if (std::abs(bz - r.R0) <= tol) r.Q0.push_back(S[i]);
  }
  r.Z0_cardinality = static_cast<int>(r.Z0.size());
  r.in_d0 = std::abs(r.D - r.R0) <= tol;
  // counts of other points at exactly diameter distance
  std::size_t max_diam_degree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t deg = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && std::abs(d[i][j] - r.D) <= tol) ++deg;
    max_diam_degree = std::max(max_diam_degree, deg);
  }
  r.in_dm1 = r.in_d0 && max_diam_degree == n - 1;
  r.in_d0_Nminus1 = r.in_d0 && n >= 2 && max_diam_degree >= n - 2;
  return r;
}

bool closure_Z1_membership(const Space& s, const PointList& S, double tol) {
  const NetClassification c = self_sets(s, S, tol);
  if (c.Z0.size() >= 2) {
    if (diameter(s, c.Z0) < c.R0 - tol) return true;
  } else {
    return true;  // D(Z0) = 0 < R0 for a single center (nondegenerate net)
  }
  const std::size_t n = S.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(s.dist(S[i], S[j]) - c.R0) > tol) continue;
      PointList rest;
      for (std::size_t t = 0; t < n; ++t)
        if (t != i && t != j) rest.push_back(S[t]);
      if (rest.empty()) return true;
      const double cd = cross_diameter(s, PointList{S[i], S[j]}, rest);
      if (std::abs(cd - c.R0) <= tol) return true;
    }
  return false;
}

CenterResult chebyshev_center(const Space& s, const PointList& M,
                              const CenterOptions& opt) {
  if (M.empty()) throw std::invalid_argument("empty point set");
  if (!s.is_geodesic())
    throw std::invalid_argument("center solver needs a geodesic space");
  if (!(opt.tol > 0.0) || opt.max_iter <= 0)
    throw std::invalid_argument("tolerance and iteration budget must be positive");
  CenterResult res;
  if (M.size() == 1) {
    res.centers = {M[0]};
    return res;
  }
  if (M.size() == 2) {
    const Point mid = s.omega(M[0], M[1], 0.5);
    res.centers = {mid};
    res.radius = beta_point(s, M, mid);
    res.iterations = 1;
    return res;
  }

  long iters = 0;
  Point x = M[0];
  double fx = beta_point(s, M, x);
  for (const Point& m : M) {   // best point of M as warm start
    const double f = beta_point(s, M, m);
    if (f < fx) {
      fx = f;
      x = m;
    }
  }
  Point best = x;
  double fbest = fx;

  // Phase 1: harmonic-step descent toward the farthest point; globalizes.
  // Stops after 50 consecutive steps without a tol-sized improvement.
  int stalled = 0;
  const long phase1_cap = std::min<long>(2000, opt.max_iter);
  for (long k = 0; k < phase1_cap && stalled < 50; ++k) {
    const Point& far = M[farthest_index(s, M, x)];
    x = s.omega(x, far, 1.0 / (static_cast<double>(k) + 2.0));
    const double f = beta_point(s, M, x);
    ++iters;
    if (f < fbest - opt.tol) {
      fbest = f;
      best = x;
      stalled = 0;
    } else {
      if (f < fbest) {
        fbest = f;
        best = x;
      }
      ++stalled;
    }
  }

  double residual = opt.tol;
  if (s.kind() == SpaceKind::Euclidean) {
    // exact active-set finish
    euclidean_polish(s, M, best, fbest);
    residual = 0.0;
  } else {
    // Phase 2: the same move with an adaptive level step
    // lambda = (f - level)/f, level = fbest - gap, gap halved on stalls.
    const double D = diameter(s, M);
    double gap = std::max(fbest - D / 2.0, opt.tol);
    x = best;
    while (gap > opt.tol / 4.0 && iters < opt.max_iter) {
      const double level = fbest - gap;
      bool improved = false;
      for (int k = 0; k < 240 && iters < opt.max_iter; ++k) {
        const Point& far = M[farthest_index(s, M, x)];
        const double fcur = beta_point(s, M, x);
        double lam = (fcur - level) / std::max(fcur, 1e-300);
        lam = std::clamp(lam, 0.0, 0.95);
        if (lam == 0.0) break;
        x = s.omega(x, far, lam);
        const double f = beta_point(s, M, x);
        ++iters;
        if (f < fbest - 1e-15) {
          fbest = f;
          best = x;
          improved = true;
        }
      }
      if (!improved || fbest > level + gap / 4.0) gap /= 2.0;
      x = best;
    }
    residual = gap;
  }
  res.centers = {best};
  res.radius = fbest;
  res.iterations = iters;
  res.residual = residual;
  return res;
}

namespace {

struct PartitionState {
  const Space* s;
  const PointList* M;
  int N;
  std::size_t guard;
  std::size_t visited = 0;
  std::map<std::uint64_t, std::pair<double, Point>> cache;
  double best_radius = std::numeric_limits<double>::infinity();
  std::vector<int> best_assign;

  std::pair<double, Point> cluster_center(std::uint64_t mask,
                                          const std::vector<int>& assign, int b) {
    auto it = cache.find(mask);
    if (it != cache.end()) return it->second;
    PointList cluster;
    for (std::size_t i = 0; i < assign.size(); ++i)
      if (assign[i] == b) cluster.push_back((*M)[i]);
    const CenterResult c = chebyshev_center(*s, cluster);
    auto val = std::make_pair(c.radius, c.centers[0]);
    cache.emplace(mask, val);
    return val;
  }
};

void enumerate_partitions(PartitionState& st, std::vector<int>& assign,
                          std::size_t i, int used) {
  if (st.visited > st.guard)
    throw std::runtime_error("partition guard exceeded in exact mode");
  const std::size_t n = assign.size();
  if (i == n) {
    ++st.visited;
    double radius = 0.0;
    for (int b = 0; b < used && radius < st.best_radius; ++b) {
      std::uint64_t mask = 0;
      for (std::size_t t = 0; t < n; ++t)
        if (assign[t] == b) mask |= (1ull << t);
      radius = std::max(radius, st.cluster_center(mask, assign, b).first);
    }
    if (radius < st.best_radius) {
      st.best_radius = radius;
      st.best_assign = assign;
    }
    return;
  }
  for (int b = 0; b < std::min(used + 1, st.N); ++b) {
    assign[i] = b;
    enumerate_partitions(st, assign, i + 1, std::max(used, b + 1));
  }
}

}  // namespace

BestNetResult best_nnet(const Space& s, const PointList& M, int N,
                        BestNetMode mode, unsigned seed,
                        std::size_t partition_guard) {
  if (M.empty()) throw std::invalid_argument("empty point set");
  if (N < 1) throw std::invalid_argument("N must be positive");
  BestNetResult res;
  if (static_cast<std::size_t>(N) >= M.size()) {
    res.net = dedupe_points(s, M);
    res.radius = 0.0;
    res.exact = true;
    return res;
  }
  if (mode == BestNetMode::Exact) {
    if (M.size() > 63) throw std::runtime_error("exact mode supports up to 63 points");
    PartitionState st{&s, &M, N, partition_guard, 0, {}, std::numeric_limits<double>::infinity(), {}};
    std::vector<int> assign(M.size(), -1);
    enumerate_partitions(st, assign, 0, 0);
    res.radius = st.best_radius;
    res.exact = true;
    std::vector<PointList> clusters(N);
    for (std::size_t i = 0; i < M.size(); ++i)
      if (st.best_assign[i] >= 0) clusters[st.best_assign[i]].push_back(M[i]);
    for (const auto& c : clusters)
      if (!c.empty()) res.net.push_back(chebyshev_center(s, c).centers[0]);
    return res;
  }

  // local mode: farthest-first seeding plus random restarts, then alternate
  // assignment and recentering.
  Rng rng(seed);
  double best_radius = std::numeric_limits<double>::infinity();
  PointList best_net;
  const int restarts = 8;
  for (int t = 0; t < restarts; ++t) {
    // first restart seeds by farthest-first traversal; the rest sample freely
    // to escape symmetric tie patterns
    PointList centers;
    centers.push_back(M[t == 0 ? 0 : rng.uniform_index(M.size())]);
    while (static_cast<int>(centers.size()) < N) {
      if (t == 0) {
        std::size_t far = 0;
        double fd = -1.0;
        for (std::size_t i = 0; i < M.size(); ++i) {
          const double d = dist_to_set(s, M[i], centers);
          if (d > fd) {
            fd = d;
            far = i;
          }
        }
        centers.push_back(M[far]);
      } else {
        centers.push_back(M[rng.uniform_index(M.size())]);
      }
    }
    std::vector<int> assign(M.size(), -1);
    for (int round = 0; round < 50; ++round) {
      bool changed = false;
      for (std::size_t i = 0; i < M.size(); ++i) {
        int bestc = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (int c = 0; c < N; ++c) {
          const double d = s.dist(M[i], centers[c]);
          if (d < bd) {
            bd = d;
            bestc = c;
          }
        }
        if (assign[i] != bestc) {
          assign[i] = bestc;
          changed = true;
        }
      }
      if (!changed) break;
      for (int c = 0; c < N; ++c) {
        PointList cluster;
        for (std::size_t i = 0; i < M.size(); ++i)
          if (assign[i] == c) cluster.push_back(M[i]);
        if (!cluster.empty()) centers[c] = chebyshev_center(s, cluster).centers[0];
      }
    }
    const double radius = deviation(s, M, centers);
    if (radius < best_radius) {
      best_radius = radius;
      best_net = centers;
    }
  }
  res.net = best_net;
  res.radius = best_radius;
  res.exact = false;
  return res;
}

RadiusBoundsReport radius_perturbation_bounds(const Space& s, const PointList& M,
                                              const PointList& W,
                                              const PointList& A,
                                              const PointList& B, double tol) {
  RadiusBoundsReport r;
  const double rwm = relative_radius_centers(s, M, W).radius;
  const double rba = relative_radius_centers(s, A, B).radius;
  r.lhs = std::abs(rwm - rba);
  r.rhs_deviation = std::max(deviation(s, M, A) + deviation(s, B, W),
                             deviation(s, A, M) + deviation(s, W, B));
  r.rhs_alpha = hausdorff(s, M, A) + hausdorff(s, W, B);
  r.slack_deviation = r.rhs_deviation - r.lhs;
  r.slack_alpha = r.rhs_alpha - r.lhs;
  r.ok = r.lhs <= r.rhs_deviation + tol && r.lhs <= r.rhs_alpha + tol;
  return r;
}

bool hull_membership_check(const Space& s, const PointList& M, double tol) {
  if (s.kind() != SpaceKind::Euclidean)
    throw std::invalid_argument("hull membership is Euclidean-only");
  const Point c = chebyshev_center(s, M).centers[0];
  return body_dist(s, ConvexBody::hull(M), c) <= tol;
}

}  // namespace metra
