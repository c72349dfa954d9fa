#pragma once

#include <optional>
#include <vector>

#include "metra/point.hpp"
#include "metra/space.hpp"

namespace metra {

// Open ball of radius r in a strictly convex norm (p-norms, p in (1, inf);
// p = 2 is the Euclidean/Klein case) carrying the cross-ratio metric
// (k/2) ln R(x, y, y_x, x_y).
struct HilbertBall {
  double r = 1.0;
  double k = 1.0;
  double norm_p = 2.0;
};

double ball_norm(const HilbertBall& H, const std::vector<double>& v);

// Boundary hit of the ray from x through y (beyond y). Closed-form
// quadratic for the Euclidean norm, bisection in the ray parameter otherwise.
Point boundary_hit(const HilbertBall& H, const Point& x, const Point& y);

double hilbert_dist(const HilbertBall& H, const Point& x, const Point& y);

// Midpoint in closed form: (x + a y)/(1 + a) with
// a = sqrt(|x-y_x| |x-x_y| / (|y-y_x| |y-x_y|)).
Point hilbert_midpoint(const HilbertBall& H, const Point& x, const Point& y);

// The unary geodesic operation lambda_p(x) (lambda real) in closed form.
Point hilbert_lambda_p(const HilbertBall& H, const Point& p, const Point& x,
                       double lambda);

// Median identity in the hyperbolic (Euclidean-norm) model: returns
// {cosh(d(z,w)/k), (cosh(d(z,u)/k)+cosh(d(z,v)/k)) / (2 cosh(d(u,v)/(2k)))}
// where w is the midpoint of [u,v]; the two sides agree.
struct MedianCheck {
  double direct = 0.0;
  double formula = 0.0;
};
MedianCheck median_length(const Space& klein, const Point& z, const Point& u,
                          const Point& v);

// Rescaled-geodesic tangent seminorm at p:
// limit mode evaluates q(nu) = dist(omega(p,x,nu), omega(p,y,nu))/nu on
// nu = 2^-4..2^-40 (non-increasing by geodesic convexity) and returns the
// first stable value; closed form (Klein ball at p = 0) is the law of
// cosines in dist(0,.) with the model angle.
enum class TangentMode { Limit, ClosedForm };
struct TangentValue {
  double value = 0.0;
  bool converged = true;
  std::vector<double> trace;  // q(nu) per grid step (limit mode)
};
TangentValue tangent_norm(const Space& s, const Point& p, const Point& x,
                          const Point& y, TangentMode mode);

// Metric on (point, scale) pairs at base p:
// m_p((x;l),(y;m)) = tau * mbar_p(omega(p,x,l/tau), omega(p,y,m/tau)).
struct TangentVector {
  Point rep;
  double scale = 1.0;
};
double tangent_dist(const Space& s, const Point& p, const TangentVector& v1,
                    const TangentVector& v2);

// Upper comparison angle between the segments [p,x], [p,y]: limit of the
// Euclidean comparison-triangle angle as both sides shrink.
double upper_angle(const Space& s, const Point& p, const Point& x, const Point& y);

// psi_y(x) = dist(p,x) dist(p,y) cos(upper angle).
double psi_functional(const Space& s, const Point& p, const Point& y,
                      const Point& x);

// phi_L(x) = signed distance from p to the projection of x on the oriented
// geodesic line through p with model direction `dir`.
double phi_functional(const Space& s, const Point& p,
                      const std::vector<double>& dir, const Point& x);

}  // namespace metra
