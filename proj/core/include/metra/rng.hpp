#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "metra/point.hpp"
#include "metra/space.hpp"

namespace metra {

// Seeded generator with a stable cross-platform stream: raw bits come from
// std::mt19937_64 (bit-exact by the standard) and all distributions are
// derived here explicitly, never through implementation-defined std
// distributions. uniform01 maps the top 53 bits onto [0,1); normal is
// Box-Muller.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  std::size_t uniform_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index needs n > 0");
    return static_cast<std::size_t>(uniform01() * static_cast<double>(n)) % n;
  }
  double normal() {
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // Uniform point in [-scale, scale]^dim.
  Point cube_point(std::size_t dim, double scale);
  // Point in the Klein ball with Euclidean norm at most frac * r.
  Point klein_point(const Space& klein, std::size_t dim, double frac = 0.95);
  Point point_in(const Space& s, std::size_t dim, double scale = 1.0);
  PointList points_in(const Space& s, std::size_t n, std::size_t dim,
                      double scale = 1.0);
  // n pairwise-distinct points (min separation enforced by rejection).
  PointList distinct_points(const Space& s, std::size_t n, std::size_t dim,
                            double scale = 1.0, double min_sep = 1e-3);

 private:
  std::mt19937_64 gen_;
};

}  // namespace metra
