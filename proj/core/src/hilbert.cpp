#include "metra/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace metra {
namespace {

double pnorm(const std::vector<double>& v, double p) {
  if (p == 2.0) return std::sqrt(vec::norm2(v));
  double m = 0.0;
  for (double c : v) m = std::max(m, std::abs(c));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double c : v) s += std::pow(std::abs(c) / m, p);
  return m * std::pow(s, 1.0 / p);
}

void require_interior(const HilbertBall& H, const Point& x) {
  if (!(ball_norm(H, x.coords()) < H.r))
    throw std::invalid_argument("point on or outside the Hilbert ball");
}

// parameter t >= 1 with |x + t (y - x)| = r (the hit beyond y on the ray from
// x through y)
double hit_parameter(const HilbertBall& H, const std::vector<double>& x,
                     const std::vector<double>& d) {
  if (H.norm_p == 2.0) {
    const double a = vec::norm2(d);
    const double b = vec::dot(x, d);
    const double c = vec::norm2(x) - H.r * H.r;
    const double disc = b * b - a * c;
    return (-b + std::sqrt(disc)) / a;
  }
  auto norm_at = [&](double t) {
    std::vector<double> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + t * d[i];
    return pnorm(z, H.norm_p) - H.r;
  };
  double lo = 1.0, hi = 2.0;
  while (norm_at(hi) < 0.0) hi *= 2.0;
  // |z(t)| - r is increasing past the minimum-norm point of the line, and the
  // hit lies in that monotone regime; bisection to machine interval width.
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (norm_at(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double ball_norm(const HilbertBall& H, const std::vector<double>& v) {
  return pnorm(v, H.norm_p);
}

Point boundary_hit(const HilbertBall& H, const Point& x, const Point& y) {
  require_interior(H, x);
  require_interior(H, y);
  const std::vector<double> d = vec::sub(y.coords(), x.coords());
  if (vec::norm2(d) == 0.0) throw std::invalid_argument("x = y has no ray");
  const double t = hit_parameter(H, x.coords(), d);
  return Point(vec::add(x.coords(), vec::scale(d, t)));
}

double hilbert_dist(const HilbertBall& H, const Point& x, const Point& y) {
  require_interior(H, x);
  require_interior(H, y);
  const std::vector<double> d = vec::sub(y.coords(), x.coords());
  if (vec::norm2(d) == 0.0) return 0.0;
  const Point yx = boundary_hit(H, x, y);  // beyond y
  const Point xy = boundary_hit(H, y, x);  // beyond x
  const double num = pnorm(vec::sub(x.coords(), yx.coords()), H.norm_p) *
                     pnorm(vec::sub(y.coords(), xy.coords()), H.norm_p);
  const double den = pnorm(vec::sub(x.coords(), xy.coords()), H.norm_p) *
                     pnorm(vec::sub(y.coords(), yx.coords()), H.norm_p);
  return 0.5 * H.k * std::log(num / den);
}

Point hilbert_midpoint(const HilbertBall& H, const Point& x, const Point& y) {
  require_interior(H, x);
  require_interior(H, y);
  if (vec::norm2(vec::sub(y.coords(), x.coords())) == 0.0) return x;
  const Point yx = boundary_hit(H, x, y);
  const Point xy = boundary_hit(H, y, x);
  const double a = std::sqrt(
      (pnorm(vec::sub(x.coords(), yx.coords()), H.norm_p) *
       pnorm(vec::sub(x.coords(), xy.coords()), H.norm_p)) /
      (pnorm(vec::sub(y.coords(), yx.coords()), H.norm_p) *
       pnorm(vec::sub(y.coords(), xy.coords()), H.norm_p)));
  std::vector<double> m(x.dim());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = (x[i] + a * y[i]) / (1.0 + a);
  return Point(std::move(m));
}

Point hilbert_lambda_p(const HilbertBall& H, const Point& p, const Point& x,
                       double lambda) {
  require_interior(H, p);
  require_interior(H, x);
  const std::vector<double> d = vec::sub(x.coords(), p.coords());
  const double dn = pnorm(d, H.norm_p);
  if (dn == 0.0) return p;
  const Point xp = boundary_hit(H, p, x);  // beyond x
  const Point px = boundary_hit(H, x, p);  // behind p
  const double A = pnorm(vec::sub(p.coords(), xp.coords()), H.norm_p);
  const double B = pnorm(vec::sub(x.coords(), px.coords()), H.norm_p);
  const double C = pnorm(vec::sub(p.coords(), px.coords()), H.norm_p);
  const double E = pnorm(vec::sub(x.coords(), xp.coords()), H.norm_p);
  const double num = std::pow(A, lambda) * std::pow(B, lambda) -
                     std::pow(C, lambda) * std::pow(E, lambda);
  const double den = std::pow(A, lambda - 1.0) * std::pow(B, lambda) +
                     std::pow(C, lambda - 1.0) * std::pow(E, lambda);
  const double offset = num / den;
  Point z(vec::add(p.coords(), vec::scale(d, offset / dn)));
  require_interior(H, z);
  return z;
}

MedianCheck median_length(const Space& klein, const Point& z, const Point& u,
                          const Point& v) {
  if (klein.kind() != SpaceKind::KleinBall)
    throw std::invalid_argument("median identity needs the Klein model");
  const double k = klein.klein_k();
  const Point w = klein.omega(u, v, 0.5);
  MedianCheck out;
  out.direct = std::cosh(klein.dist(z, w) / k);
  out.formula =
      (std::cosh(klein.dist(z, u) / k) + std::cosh(klein.dist(z, v) / k)) /
      (2.0 * std::cosh(klein.dist(u, v) / (2.0 * k)));
  return out;
}

namespace {

// displacement of omega(p, q, lam) from p in model coordinates; uses the
// expm1 form so tiny lam keeps full relative accuracy (Klein), or plain
// scaling (Euclidean).
std::vector<double> omega_offset(const Space& s, const Point& p, const Point& q,
                                 double lam) {
  const std::vector<double> dir = vec::sub(q.coords(), p.coords());
  if (vec::norm2(dir) == 0.0) return dir;
  if (s.kind() == SpaceKind::Euclidean) return vec::scale(dir, lam);
  // chord roots around p
  const double r = s.klein_r(), k = s.klein_k();
  const double a = vec::norm2(dir);
  const double b = vec::dot(p.coords(), dir);
  const double c = vec::norm2(p.coords()) - r * r;
  const double sq = std::sqrt(b * b - a * c);
  const double q0 = -(b + std::copysign(sq, b));
  double t1, t2;
  if (b >= 0.0) {
    t1 = q0 / a;
    t2 = c / q0;
  } else {
    t1 = c / q0;
    t2 = q0 / a;
  }
  const double tm = std::min(t1, t2), tp = std::max(t1, t2);
  const double dpq = s.dist(p, q);
  const double e0 = -tm / tp;
  const double g = std::exp(2.0 * lam * dpq / k);
  const double dt = -tm * std::expm1(2.0 * lam * dpq / k) / (1.0 + e0 * g);
  return vec::scale(dir, dt);
}

}  // namespace

TangentValue tangent_norm(const Space& s, const Point& p, const Point& x,
                          const Point& y, TangentMode mode) {
  if (!s.is_geodesic())
    throw std::invalid_argument("tangent seminorm needs a geodesic space");
  TangentValue out;
  if (mode == TangentMode::ClosedForm) {
    if (s.kind() == SpaceKind::Euclidean) {
      out.value = s.dist(x, y);
      return out;
    }
    if (vec::norm2(p.coords()) != 0.0)
      throw std::invalid_argument("closed form is available at the origin only");
    const double rx = s.dist(p, x), ry = s.dist(p, y);
    if (rx == 0.0 || ry == 0.0) {
      out.value = std::max(rx, ry);
      return out;
    }
    const double ca =
        std::clamp(vec::dot(x.coords(), y.coords()) /
                       std::sqrt(vec::norm2(x.coords()) * vec::norm2(y.coords())),
                   -1.0, 1.0);
    out.value = std::sqrt(std::max(0.0, rx * rx + ry * ry - 2.0 * rx * ry * ca));
    return out;
  }
  if (s.dist(x, y) == 0.0) {
    out.value = 0.0;
    return out;
  }
  double prev = std::numeric_limits<double>::infinity();
  out.converged = false;
  for (int kexp = 4; kexp <= 40; ++kexp) {
    const double nu = std::ldexp(1.0, -kexp);
    const std::vector<double> ox = omega_offset(s, p, x, nu);
    const std::vector<double> oy = omega_offset(s, p, y, nu);
    const double q = s.dist_displaced(p, ox, oy) / nu;
    out.trace.push_back(q);
    if (std::abs(prev - q) < 1e-7) {
      out.value = q;
      out.converged = true;
      return out;
    }
    prev = q;
  }
  out.value = prev;
  return out;
}

double tangent_dist(const Space& s, const Point& p, const TangentVector& v1,
                    const TangentVector& v2) {
  if (v1.scale < 0.0 || v2.scale < 0.0)
    throw std::invalid_argument("scales must be nonnegative");
  const double tau = 2.0 * std::max({v1.scale, v2.scale, 1.0});
  const Point a = s.omega(p, v1.rep, v1.scale / tau);
  const Point b = s.omega(p, v2.rep, v2.scale / tau);
  const TangentValue t = tangent_norm(s, p, a, b, TangentMode::Limit);
  return tau * t.value;
}

double upper_angle(const Space& s, const Point& p, const Point& x, const Point& y) {
  if (s.dist(p, x) == 0.0 || s.dist(p, y) == 0.0)
    throw std::invalid_argument("upper angle needs x, y distinct from p");
  double prev = -10.0;
  for (int kexp = 2; kexp <= 40; ++kexp) {
    const double t = std::ldexp(1.0, -kexp);
    const std::vector<double> ox = omega_offset(s, p, x, t);
    const std::vector<double> oy = omega_offset(s, p, y, t);
    const double a = t * s.dist(p, x);
    const double b = t * s.dist(p, y);
    const double c = s.dist_displaced(p, ox, oy);
    const double cosg = std::clamp((a * a + b * b - c * c) / (2.0 * a * b), -1.0, 1.0);
    const double g = std::acos(cosg);
    if (std::abs(g - prev) < 1e-7) return g;
    prev = g;
  }
  return prev;
}

double psi_functional(const Space& s, const Point& p, const Point& y,
                      const Point& x) {
  if (s.dist(p, x) == 0.0 || s.dist(p, y) == 0.0) return 0.0;
  return s.dist(p, x) * s.dist(p, y) * std::cos(upper_angle(s, p, x, y));
}

double phi_functional(const Space& s, const Point& p,
                      const std::vector<double>& dir, const Point& x) {
  if (vec::norm2(dir) == 0.0) throw std::invalid_argument("zero direction");
  // follow the geodesic line through p with the given model direction; the
  // distance to x is convex along it, so golden search over a bracketed range
  // finds the projection
  auto at = [&](double t) {
    if (s.kind() == SpaceKind::Euclidean)
      return Point(vec::add(p.coords(), vec::scale(dir, t)));
    // clamp the chord parameter inside the ball
    const double r = s.klein_r();
    const double a = vec::norm2(dir);
    const double b = vec::dot(p.coords(), dir);
    const double c = vec::norm2(p.coords()) - r * r;
    const double sq = std::sqrt(b * b - a * c);
    const double tmin = (-b - sq) / a, tmax = (-b + sq) / a;
    const double tt = std::clamp(t, tmin + 1e-12 * (tmax - tmin),
                                 tmax - 1e-12 * (tmax - tmin));
    return Point(vec::add(p.coords(), vec::scale(dir, tt)));
  };
  double lo = -1.0, hi = 1.0;
  auto f = [&](double t) { return s.dist(x, at(t)); };
  // extend until the minimum is bracketed
  while (f(lo) < f(lo + 1e-9) && lo > -1e6) lo *= 2.0;
  while (f(hi) < f(hi - 1e-9) && hi < 1e6) hi *= 2.0;
  const double gr = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 300 && b - a > 1e-13 * (1.0 + std::abs(a) + std::abs(b));
       ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  const double tproj = 0.5 * (a + b);
  const Point proj = at(tproj);
  const double d = s.dist(p, proj);
  if (d <= 1e-12) return 0.0;
  return tproj >= 0.0 ? d : -d;
}

}  // namespace metra
