#pragma once

#include <functional>

#include "gentrig/params.hpp"

namespace gentrig {

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

namespace quad {

/// Integrand callback: f(t, t - a, b - t). The endpoint distances come
/// straight out of the node transform, so integrands with endpoint-singular
/// factors can be evaluated at full precision arbitrarily close to a or b.
using Integrand = std::function<double(double, double, double)>;

/// Tanh-sinh (double exponential) quadrature on [a, b]. Absorbs integrable
/// endpoint singularities without any manual substitution. Levels are
/// refined until the error estimate drops below tol*(1 + |I|) or max_level
/// is hit; on a cap hit the best estimate is returned with its honest error.
QuadResult tanh_sinh(const Integrand& f, double a, double b, double tol,
                     int max_level = 12);

/// Globally adaptive 15-point Gauss-Kronrod bisection for integrands that
/// are smooth in the interior. Target accuracy tol*(1 + |I|).
QuadResult gauss_kronrod(const std::function<double(double)>& f, double a,
                         double b, double tol);

}  // namespace quad

/// log Gamma(x) for x > 0. Lanczos approximation (g = 7, 9 terms), with the
/// reflection formula below 0.5; good to ~1e-14 relative.
double log_gamma(double x);

/// log B(a, b) = lgamma(a) + lgamma(b) - lgamma(a+b) for a, b > 0.
double log_beta(double a, double b);

/// F_{p,q}(y) = int_0^y (1 - t^q)^(-1/p) dt, 0 <= y < 1. Arguments above
/// 1 - 1e-15 are capped there (the integrand's singular end; documented
/// precision floor).
QuadResult integral_f(const ParamPair& pq, double y);

/// F_{p,q}(1) = pi_{p,q}/2 by direct quadrature of the singular integral;
/// +inf when p <= 1. Independent of the Beta-function route in half_period.
ExtReal integral_f_to_one(const ParamPair& pq);

/// G_{p,q}(y) = int_0^y (1 + t^q)^(-1/p) dt, y >= 0.
QuadResult integral_g(const ParamPair& pq, double y);

}  // namespace gentrig
