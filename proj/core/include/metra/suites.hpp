#pragma once

#include <string>
#include <vector>

#include "metra/report.hpp"

namespace metra {

// Named property suites: each runs a batch of inequality/equality checks with
// seeded instances and records lhs/rhs/slack per check. Suite names:
// spaces, hausdorff, nnet, chebyshev, ball, projection, hilbert, maps.
std::vector<std::string> suite_names();
Report run_suite(const std::string& name, std::uint64_t seed, double tol);

}  // namespace metra
