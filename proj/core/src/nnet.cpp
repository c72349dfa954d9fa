#include "metra/nnet.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "metra/hausdorff.hpp"

namespace metra {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (sum d_i^p)^(1/p) scaled by the largest entry so large p cannot overflow.
double lp_norm(const std::vector<double>& d, double p) {
  if (std::isinf(p)) return *std::max_element(d.begin(), d.end());
  const double m = *std::max_element(d.begin(), d.end());
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double v : d) s += std::pow(v / m, p);
  return m * std::pow(s, 1.0 / p);
}

std::vector<std::vector<double>> dist_matrix(const Space& s, const PointList& A,
                                             const PointList& B) {
  std::vector<std::vector<double>> d(A.size(), std::vector<double>(B.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j) d[i][j] = s.dist(A[i], B[j]);
  return d;
}

// All multisets of size n over `support` (compositions of n into |support|
// positive parts), emitted as point lists.
void compositions(const PointList& support, int n,
                  std::vector<PointList>& out) {
  const int k = static_cast<int>(support.size());
  if (k == 0 || n < k) return;
  std::vector<int> counts(k, 1);
  const int rest = n - k;
  // distribute `rest` extra copies over the k slots (weak compositions)
  std::vector<int> extra(k, 0);
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == k - 1) {
      extra[idx] = remaining;
      PointList m;
      for (int i = 0; i < k; ++i)
        for (int c = 0; c < counts[i] + extra[i]; ++c) m.push_back(support[i]);
      out.push_back(std::move(m));
      return;
    }
    for (int give = 0; give <= remaining; ++give) {
      extra[idx] = give;
      rec(idx + 1, remaining - give);
    }
  };
  rec(0, rest);
}

}  // namespace

double rho_np(const Space& s, const PointList& X, const PointList& Y, double p) {
  if (X.size() != Y.size()) throw std::invalid_argument("tuple size mismatch");
  if (X.empty()) throw std::invalid_argument("empty tuple");
  if (!(p >= 1.0)) throw std::invalid_argument("p must be in [1, inf]");
  std::vector<double> d(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) d[i] = s.dist(X[i], Y[i]);
  return lp_norm(d, p);
}

Assignment alpha_p(const Space& s, const PointList& S, const PointList& T, double p) {
  if (S.size() != T.size()) throw std::invalid_argument("tuple size mismatch");
  if (S.empty()) throw std::invalid_argument("empty tuple");
  if (!(p >= 1.0)) throw std::invalid_argument("p must be in [1, inf]");
  const auto d = dist_matrix(s, S, T);
  Assignment a;
  a.p = p;
  if (std::isinf(p)) {
    auto r = bottleneck_assignment(d);
    a.perm = std::move(r.perm);
    a.cost = r.value;
    return a;
  }
  // Min-cost assignment on (d/dmax)^p; the scaling keeps powers finite and
  // does not change the optimal pairing.
  double dmax = 0.0;
  for (const auto& row : d)
    for (double v : row) dmax = std::max(dmax, v);
  if (dmax == 0.0) {
    a.perm.resize(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) a.perm[i] = static_cast<int>(i);
    a.cost = 0.0;
    return a;
  }
  std::vector<std::vector<double>> c(d.size(), std::vector<double>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) c[i][j] = std::pow(d[i][j] / dmax, p);
  auto r = min_cost_assignment(c);
  a.perm = std::move(r.perm);
  std::vector<double> matched(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) matched[i] = d[i][a.perm[i]];
  a.cost = lp_norm(matched, p);
  return a;
}

double alpha_star(const Space& s, const PointList& S, const PointList& T) {
  return hausdorff(s, dedupe_points(s, S), dedupe_points(s, T));
}

AlphaPRBounds alpha_pR(const Space& s, const PointList& S, const PointList& T,
                       double p, int max_chain) {
  if (S.size() != T.size()) throw std::invalid_argument("tuple size mismatch");
  if (max_chain < 1) throw std::invalid_argument("max_chain must be positive");
  const int n = static_cast<int>(S.size());
  AlphaPRBounds res;
  res.lower = alpha_star(s, S, T);
  res.upper = alpha_p(s, S, T, p).cost;
  res.chain_edges = 1;
  if (n == 1) {
    res.exact = res.upper;
    return res;
  }
  if (std::isinf(p) && n <= 2) {
    // quotient metric coincides with the Hausdorff metric at N <= 2
    res.exact = res.lower;
    return res;
  }

  // Candidate intermediate supports: subsets of supp(S) u supp(T) of size <= N.
  const PointList pool = dedupe_points(s, [&] {
    PointList u = S;
    u.insert(u.end(), T.begin(), T.end());
    return u;
  }());
  const int m = static_cast<int>(pool.size());
  if (m > 16) return res;  // family too large; keep honest bounds only

  std::vector<std::vector<int>> supports;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    if (std::popcount(mask) > n) continue;
    std::vector<int> idx;
    for (int b = 0; b < m; ++b)
      if (mask & (1u << b)) idx.push_back(b);
    supports.push_back(std::move(idx));
  }
  if (supports.size() > 20000) return res;

  // Multiset labelings of every candidate support.
  std::vector<std::vector<PointList>> labelings(supports.size());
  std::size_t labeling_total = 0;
  for (std::size_t c = 0; c < supports.size(); ++c) {
    PointList sup;
    for (int b : supports[c]) sup.push_back(pool[b]);
    compositions(sup, n, labelings[c]);
    labeling_total += labelings[c].size();
    if (labeling_total > 200000) return res;
  }

  const std::size_t K = supports.size();
  auto min_alpha = [&](const PointList& fixed, std::size_t cls) {
    double best = kInf;
    for (const PointList& B : labelings[cls])
      best = std::min(best, alpha_p(s, fixed, B, p).cost);
    return best;
  };
  std::vector<double> from_S(K), to_T(K);
  for (std::size_t c = 0; c < K; ++c) {
    from_S[c] = min_alpha(S, c);
    to_T[c] = min_alpha(T, c);
  }
  std::vector<std::vector<double>> edge(K, std::vector<double>(K, kInf));
  for (std::size_t a = 0; a < K; ++a)
    for (std::size_t b = a + 1; b < K; ++b) {
      double best = kInf;
      for (const PointList& A : labelings[a])
        for (const PointList& B : labelings[b])
          best = std::min(best, alpha_p(s, A, B, p).cost);
      edge[a][b] = edge[b][a] = best;
    }

  double best = res.upper;  // direct chain (one alpha_p term)
  int best_edges = 1;
  std::vector<double> dist = from_S;
  bool converged = false;
  for (int steps = 2; steps <= max_chain; ++steps) {
    for (std::size_t c = 0; c < K; ++c) {
      const double v = dist[c] + to_T[c];
      if (v < best - 1e-12) {
        best = v;
        best_edges = steps;
      }
    }
    if (steps == max_chain) break;
    std::vector<double> next(K, kInf);
    bool improved = false;
    for (std::size_t a = 0; a < K; ++a) {
      if (!std::isfinite(dist[a])) continue;
      for (std::size_t b = 0; b < K; ++b) {
        const double v = dist[a] + edge[a][b];
        if (v < next[b]) next[b] = v;
      }
    }
    for (std::size_t c = 0; c < K; ++c) {
      if (next[c] < dist[c] - 1e-12) improved = true;
      dist[c] = std::min(dist[c], next[c]);
    }
    if (!improved) {
      converged = true;
      break;
    }
  }
  res.upper = std::min(res.upper, best);
  res.chain_edges = best_edges;
  if (converged || best <= res.lower + 1e-9) res.exact = std::max(best, res.lower);
  return res;
}

PointList nnet_interpolate(const Space& s, const PointList& S, const PointList& T,
                           double p, double lambda) {
  if (!s.is_geodesic())
    throw std::invalid_argument("interpolation needs a geodesic space");
  const Assignment a = alpha_p(s, S, T, p);
  PointList out(S.size());
  for (std::size_t i = 0; i < S.size(); ++i)
    out[i] = s.omega(S[i], T[a.perm[i]], lambda);
  return out;
}

std::vector<PointList> twonet_midpoints(const Space& s, const PointList& S,
                                        const PointList& T) {
  if (!s.is_geodesic())
    throw std::invalid_argument("midpoints need a geodesic space");
  if (S.size() != 2 || T.size() != 2)
    throw std::invalid_argument("expected 2-nets");
  // pick (x,u) realizing the cross-diameter; y, v are the complements
  int xi = 0, ui = 0;
  double dmax = -1.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double d = s.dist(S[i], T[j]);
      if (d > dmax) {
        dmax = d;
        xi = i;
        ui = j;
      }
    }
  const Point &x = S[xi], &y = S[1 - xi], &u = T[ui], &v = T[1 - ui];
  const double a = hausdorff(s, dedupe_points(s, S), dedupe_points(s, T));
  std::vector<PointList> out;
  out.push_back({s.omega(x, v, 0.5), s.omega(y, u, 0.5)});
  if (std::abs(dmax - a) <= 1e-12) {
    PointList second = {s.omega(x, u, 0.5), s.omega(y, v, 0.5)};
    const bool same =
        (s.dist(out[0][0], second[0]) <= 1e-12 && s.dist(out[0][1], second[1]) <= 1e-12) ||
        (s.dist(out[0][0], second[1]) <= 1e-12 && s.dist(out[0][1], second[0]) <= 1e-12);
    if (!same) out.push_back(std::move(second));
  }
  return out;
}

Point pi_midpoint(const Space& s, const PointList& S) {
  if (S.size() == 1) return S[0];
  if (S.size() != 2) throw std::invalid_argument("expected a 2-net");
  return s.omega(S[0], S[1], 0.5);
}

}  // namespace metra
