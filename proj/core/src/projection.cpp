#include "metra/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "metra/hausdorff.hpp"

namespace metra {

Point project_convex(const Space& s, const ConvexBody& M, const Point& x) {
  return body_project(s, M, x);
}

PointList delta_projection(const Space& s, const Point& x, const PointList& M,
                           double delta) {
  return eps_projection(s, x, M, delta);
}

double lambda_disconnect(const Space& s, const PointList& M) {
  const std::size_t n = M.size();
  if (n < 2) return 0.0;
  // Prim; the answer is the largest edge of the minimum spanning tree.
  std::vector<char> in_tree(n, 0);
  std::vector<double> key(n, std::numeric_limits<double>::infinity());
  key[0] = 0.0;
  double longest = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t u = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
      if (!in_tree[i] && key[i] < best) {
        best = key[i];
        u = i;
      }
    in_tree[u] = 1;
    longest = std::max(longest, key[u]);
    for (std::size_t v = 0; v < n; ++v)
      if (!in_tree[v]) key[v] = std::min(key[v], s.dist(M[u], M[v]));
  }
  return longest;
}

namespace {

// Uniform-cell nearest-neighbor index for planar Euclidean clouds; ring
// search around the query cell.
class PlanarGrid {
 public:
  PlanarGrid(const PointList& pts, const std::vector<std::size_t>& subset,
             double cell)
      : cell_(cell) {
    if (subset.empty()) return;
    xmin_ = ymin_ = std::numeric_limits<double>::infinity();
    double xmax = -xmin_, ymax = -ymin_;
    for (std::size_t i : subset) {
      xmin_ = std::min(xmin_, pts[i][0]);
      ymin_ = std::min(ymin_, pts[i][1]);
      xmax = std::max(xmax, pts[i][0]);
      ymax = std::max(ymax, pts[i][1]);
    }
    nx_ = std::max<std::size_t>(1, static_cast<std::size_t>((xmax - xmin_) / cell_) + 1);
    ny_ = std::max<std::size_t>(1, static_cast<std::size_t>((ymax - ymin_) / cell_) + 1);
    cells_.resize(nx_ * ny_);
    for (std::size_t i : subset) {
      const auto [cx, cy] = locate(pts[i][0], pts[i][1]);
      cells_[cy * nx_ + cx].push_back(i);
    }
  }

  double nearest(const PointList& pts, double qx, double qy) const {
    if (cells_.empty()) return std::numeric_limits<double>::infinity();
    const auto [cx, cy] = locate(qx, qy);
    double best = std::numeric_limits<double>::infinity();
    const long maxring = static_cast<long>(std::max(nx_, ny_));
    for (long ring = 0; ring <= maxring; ++ring) {
      if (best < (static_cast<double>(ring) - 1.0) * cell_) break;
      for (long dx = -ring; dx <= ring; ++dx)
        for (long dy = -ring; dy <= ring; ++dy) {
          if (std::max(std::abs(dx), std::abs(dy)) != ring) continue;
          const long gx = static_cast<long>(cx) + dx;
          const long gy = static_cast<long>(cy) + dy;
          if (gx < 0 || gy < 0 || gx >= static_cast<long>(nx_) ||
              gy >= static_cast<long>(ny_))
            continue;
          for (std::size_t i : cells_[gy * nx_ + gx])
            best = std::min(best, std::hypot(pts[i][0] - qx, pts[i][1] - qy));
        }
    }
    return best;
  }

 private:
  std::pair<std::size_t, std::size_t> locate(double x, double y) const {
    const auto cx = static_cast<std::size_t>(
        std::clamp((x - xmin_) / cell_, 0.0, static_cast<double>(nx_ - 1)));
    const auto cy = static_cast<std::size_t>(
        std::clamp((y - ymin_) / cell_, 0.0, static_cast<double>(ny_ - 1)));
    return {cx, cy};
  }
  double cell_ = 1.0, xmin_ = 0.0, ymin_ = 0.0;
  std::size_t nx_ = 0, ny_ = 0;
  std::vector<std::vector<std::size_t>> cells_;
};

bool planar(const Space& s, const PointList& pts) {
  return s.kind() == SpaceKind::Euclidean && !pts.empty() && pts[0].dim() == 2;
}

// Projection sets P(x, M, c) of a sampled convex set, with deviations between
// them. Three regimes: interval-exact for geodesic segments, grid-accelerated
// for planar clouds, plain scans otherwise.
struct ProjectionSets {
  const Space* s;
  const SampledConvexSet* M;
  std::vector<double> key;  // dist(x, p)
  double base;

  ProjectionSets(const Space& sp, const Point& x, const SampledConvexSet& set)
      : s(&sp), M(&set) {
    key.resize(set.pts.size());
    base = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < set.pts.size(); ++i) {
      key[i] = sp.dist(x, set.pts[i]);
      base = std::min(base, key[i]);
    }
  }

  std::vector<std::size_t> members(double c) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < key.size(); ++i)
      if (key[i] <= base + c + 1e-12) out.push_back(i);
    return out;
  }

  // contiguous index window of the sublevel set along a geodesic segment
  std::pair<std::size_t, std::size_t> window(double c) const {
    std::size_t lo = key.size(), hi = 0;
    for (std::size_t i = 0; i < key.size(); ++i)
      if (key[i] <= base + c + 1e-12) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
      }
    return {lo, hi};
  }

  double beta(double c_outer, double c_inner) const {
    if (!M->arc.empty()) {
      const auto [alo, ahi] = window(c_outer);
      const auto [blo, bhi] = window(c_inner);
      // distances along the segment equal arclength differences
      return std::max({0.0, M->arc[blo] - M->arc[alo], M->arc[ahi] - M->arc[bhi]});
    }
    const auto inner = members(c_inner);
    const double icut = base + c_inner + 1e-12;
    double worst = 0.0;
    if (planar(*s, M->pts)) {
      const PlanarGrid grid(M->pts, inner, std::max(M->mesh * 4.0, 1e-9));
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] > base + c_outer + 1e-12 || key[i] <= icut) continue;
        worst = std::max(worst, grid.nearest(M->pts, M->pts[i][0], M->pts[i][1]));
      }
      return worst;
    }
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i] > base + c_outer + 1e-12 || key[i] <= icut) continue;
      double nd = std::numeric_limits<double>::infinity();
      for (std::size_t j : inner)
        nd = std::min(nd, s->dist(M->pts[i], M->pts[j]));
      worst = std::max(worst, nd);
    }
    return worst;
  }
};

double beta_clouds(const Space& s, const PointList& A, const PointList& B,
                   double cell) {
  double worst = 0.0;
  if (planar(s, A) && planar(s, B)) {
    std::vector<std::size_t> all(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) all[i] = i;
    const PlanarGrid grid(B, all, cell);
    for (const Point& a : A)
      worst = std::max(worst, grid.nearest(B, a[0], a[1]));
    return worst;
  }
  for (const Point& a : A) {
    double nd = std::numeric_limits<double>::infinity();
    for (const Point& b : B) nd = std::min(nd, s.dist(a, b));
    worst = std::max(worst, nd);
  }
  return worst;
}

void push(std::vector<IneqRecord>& out, std::string name, double lhs, double rhs,
          double slack) {
  IneqRecord r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.pass = lhs <= rhs + slack;
  out.push_back(std::move(r));
}

}  // namespace

std::vector<IneqRecord> ratio_monotonicity_check(
    const Space& s, const Point& x, const SampledConvexSet& M, double t,
    double eps, double delta, double eps2, double delta2, double slack) {
  if (!(0.0 < t && t < eps && eps < delta))
    throw std::invalid_argument("need 0 < t < eps < delta");
  if (!(0.0 < eps2 && eps2 <= eps && eps2 < delta2 && delta2 <= delta))
    throw std::invalid_argument("need 0 < eps' <= eps and eps' < delta' <= delta");
  ProjectionSets P(s, x, M);
  std::vector<IneqRecord> out;
  // F = P(delta), G = P(t)
  push(out, "ratio_a", P.beta(delta, eps) / (delta - eps),
       P.beta(delta, t) / (delta - t), slack);
  push(out, "ratio_b", P.beta(delta, t) / (delta - t),
       P.beta(eps, t) / (eps - t), slack);
  push(out, "ratio_c", P.beta(delta, eps) / (delta - eps),
       P.beta(delta2, eps2) / (delta2 - eps2), slack);
  // quotients against the metric projection P(0+)
  push(out, "ratio_zero_mono", P.beta(delta, 0.0) / delta,
       P.beta(delta2, 0.0) / delta2, slack);
  push(out, "linear_bound", P.beta(delta, eps),
       (2.0 * P.base / delta + 1.0) * (delta - eps), slack);
  return out;
}

std::vector<IneqRecord> delta_projection_stability(
    const Space& s, const Point& x, const Point& y, const SampledConvexSet& M,
    const SampledConvexSet& W, double eps, double delta, double slack) {
  const double mu = std::max(eps, delta);
  if (!(mu > 0.0)) throw std::invalid_argument("max{eps, delta} must be positive");
  ProjectionSets PM(s, x, M);
  ProjectionSets PW(s, y, W);
  auto collect = [](const ProjectionSets& P, double c) {
    PointList out;
    for (std::size_t i : P.members(c)) out.push_back(P.M->pts[i]);
    return out;
  };
  const PointList Px = collect(PM, eps);
  const PointList Py = collect(PW, delta);
  const double cell = std::max({M.mesh, W.mesh, 1e-9}) * 4.0;
  const double lhs = std::max(beta_clouds(s, Py, Px, cell),
                              beta_clouds(s, Px, Py, cell));
  const double aMW = std::max(beta_clouds(s, M.pts, W.pts, cell),
                              beta_clouds(s, W.pts, M.pts, cell));
  const double dxy = s.dist(x, y);
  const double perturb = std::abs(eps - delta) + 2.0 * dxy + 2.0 * aMW;
  std::vector<IneqRecord> out;
  push(out, "stability_general", lhs,
       aMW + (2.0 * PM.base / mu + 2.0) * perturb, slack);
  const double lam = mu + perturb;
  if (lam > 0.0)
    push(out, "stability_convex_pair", lhs,
         aMW + (2.0 * std::min(PM.base, PW.base) / lam + 1.0) * perturb, slack);
  return out;
}

}  // namespace metra
