#include "metra/assign.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace metra {

AssignmentResult min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) throw std::invalid_argument("empty cost matrix");
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j)
        if (!used[j]) {
          const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
          if (minv[j] < delta) {
            delta = minv[j];
            j1 = j;
          }
        }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  AssignmentResult res;
  res.perm.assign(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j]) res.perm[p[j] - 1] = j - 1;
  res.value = 0.0;
  for (int i = 0; i < n; ++i) res.value += cost[i][res.perm[i]];
  return res;
}

namespace {

// Kuhn's augmenting path on the threshold graph cost <= thr.
bool try_augment(const std::vector<std::vector<double>>& cost, double thr, int row,
                 std::vector<char>& visited, std::vector<int>& match_col) {
  const int n = static_cast<int>(cost.size());
  for (int j = 0; j < n; ++j) {
    if (visited[j] || cost[row][j] > thr) continue;
    visited[j] = 1;
    if (match_col[j] < 0 ||
        try_augment(cost, thr, match_col[j], visited, match_col)) {
      match_col[j] = row;
      return true;
    }
  }
  return false;
}

bool feasible(const std::vector<std::vector<double>>& cost, double thr,
              std::vector<int>& match_col) {
  const int n = static_cast<int>(cost.size());
  match_col.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    std::vector<char> visited(n, 0);
    if (!try_augment(cost, thr, i, visited, match_col)) return false;
  }
  return true;
}

}  // namespace

AssignmentResult bottleneck_assignment(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) throw std::invalid_argument("empty cost matrix");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : cost) values.insert(values.end(), row.begin(), row.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<int> match_col;
  int lo = 0, hi = static_cast<int>(values.size()) - 1;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (feasible(cost, values[mid], match_col))
      hi = mid;
    else
      lo = mid + 1;
  }
  feasible(cost, values[lo], match_col);
  AssignmentResult res;
  res.perm.assign(n, -1);
  for (int j = 0; j < n; ++j)
    if (match_col[j] >= 0) res.perm[match_col[j]] = j;
  res.value = 0.0;
  for (int i = 0; i < n; ++i) res.value = std::max(res.value, cost[i][res.perm[i]]);
  return res;
}

}  // namespace metra
