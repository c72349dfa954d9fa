#include "metra/maps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace metra {

void require_same_domain(const MapTable& f, const MapTable& g) {
  if (f.domain.size() != g.domain.size())
    throw std::invalid_argument("domain size mismatch");
  if (f.domain.size() != f.values.size() || g.domain.size() != g.values.size())
    throw std::invalid_argument("map table is not total on its domain");
}

double busemann_delta_p(const Space& X, const Space& Y, const MapTable& f,
                        const MapTable& g, const Point& p) {
  require_same_domain(f, g);
  double sup = 0.0;
  for (std::size_t i = 0; i < f.domain.size(); ++i) {
    const double w = std::exp(-X.dist(p, f.domain[i]));
    sup = std::max(sup, Y.dist(f.values[i], g.values[i]) * w);
  }
  return sup;
}

DeltaPSandwich delta_p_equivalence_check(const Space& X, const Space& Y,
                                         const MapTable& f, const MapTable& g,
                                         const Point& p, const Point& q,
                                         double tol) {
  DeltaPSandwich out;
  out.delta_p = busemann_delta_p(X, Y, f, g, p);
  out.delta_q = busemann_delta_p(X, Y, f, g, q);
  const double e = std::exp(X.dist(p, q));
  out.lower = out.delta_p / e;
  out.upper = out.delta_p * e;
  const double scale = std::max(1.0, out.delta_p);
  out.ok = out.delta_q >= out.lower - tol * scale &&
           out.delta_q <= out.upper + tol * scale;
  return out;
}

KuratowskiValue kuratowski_delta(const Space& X, const Space& Y, const MapTable& f,
                                 const MapTable& g, const Point& center,
                                 const std::vector<double>& radii) {
  require_same_domain(f, g);
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1]))
      throw std::invalid_argument("radii must be strictly increasing");
  KuratowskiValue out;
  double weight = 1.0;
  for (double r : radii) {
    weight *= 0.5;
    double di = 0.0;
    for (std::size_t i = 0; i < f.domain.size(); ++i)
      if (X.dist(center, f.domain[i]) <= r)
        di = std::max(di, Y.dist(f.values[i], g.values[i]));
    out.value += weight * di / (1.0 + di);  // empty ball -> 0 term
  }
  out.tail_bound = weight;
  return out;
}

bool holder_membership(const Space& X, const Space& Y, const MapTable& f,
                       double B, double alpha, double tol) {
  if (B < 0.0 || !(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("need B >= 0 and alpha in (0, 1]");
  for (std::size_t i = 0; i < f.domain.size(); ++i)
    for (std::size_t j = i + 1; j < f.domain.size(); ++j) {
      const double dx = X.dist(f.domain[i], f.domain[j]);
      const double dy = Y.dist(f.values[i], f.values[j]);
      if (dy > B * std::pow(dx, alpha) + tol) return false;
    }
  return true;
}

std::optional<double> similarity_coefficient(const Space& X, const Space& Y,
                                             const MapTable& f, double rel_tol) {
  double sigma = -1.0;
  bool found = false;
  for (std::size_t i = 0; i < f.domain.size(); ++i)
    for (std::size_t j = i + 1; j < f.domain.size(); ++j) {
      const double dx = X.dist(f.domain[i], f.domain[j]);
      if (dx <= 0.0) continue;
      const double ratio = Y.dist(f.values[i], f.values[j]) / dx;
      if (!found) {
        sigma = ratio;
        found = true;
      } else if (std::abs(ratio - sigma) > rel_tol * std::max(1.0, sigma)) {
        return std::nullopt;
      }
    }
  if (!found || sigma <= 0.0) return std::nullopt;
  return sigma;
}

}  // namespace metra
