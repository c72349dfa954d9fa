#pragma once

#include <vector>

namespace metra {

struct AssignmentResult {
  std::vector<int> perm;  // row i -> column perm[i]
  double value = 0.0;     // sum (min-cost) or max edge (bottleneck)
};

// Exact min-cost perfect assignment on a square matrix, O(n^3)
// shortest-augmenting-path with potentials.
AssignmentResult min_cost_assignment(const std::vector<std::vector<double>>& cost);

// Exact bottleneck assignment: minimizes the largest matched entry. Binary
// search over the sorted cost values with bipartite matching feasibility.
AssignmentResult bottleneck_assignment(const std::vector<std::vector<double>>& cost);

}  // namespace metra
