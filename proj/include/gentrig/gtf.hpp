#pragma once

#include <cmath>

#include "gentrig/params.hpp"

namespace gentrig {

/// log of a value in (0, 1]: via log1p(v - 1) where the difference is exact
/// (v >= 1/2) and plain log below, so relative accuracy survives at both
/// ends. Used throughout the power chains on cos/cosh values.
inline double log_unit(double v) {
  return v >= 0.5 ? std::log1p(v - 1.0) : std::log(v);
}

/// Result of a function evaluation obtained by inverting a defining
/// integral. residual is |F(value) - x| (or the G analogue).
struct EvalResult {
  double value = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

/// sin_{p,q}(x) = F_{p,q}^{-1}(x) on [0, pi_{p,q}/2); for p <= 1 the domain
/// is [0, inf) up to the y -> 1 representability floor. Safeguarded Newton
/// with bisection fallback; throws std::domain_error outside the domain or
/// within 1e-12 of the half period, convergence_error past the cap.
EvalResult sin_pq(const ParamPair& pq, double x);

/// cos_{p,q}(x) = (d/dx) sin_{p,q}(x) = (1 - sin_{p,q}^q x)^{1/p}.
EvalResult cos_pq(const ParamPair& pq, double x);

/// sinh_{p,q}(x) = G_{p,q}^{-1}(x) on [0, pi_{r,q}/2), r = r_map(pq).
EvalResult sinh_pq(const ParamPair& pq, double x);

/// cosh_{p,q}(x) = (1 + sinh_{p,q}^q x)^{1/p}.
EvalResult cosh_pq(const ParamPair& pq, double x);

/// tan_{p,q} = sin_{p,q} / cos_{p,q}.
double tan_pq(const ParamPair& pq, double x);

/// tau_{p,q} = sin_{p,q} / cos_{p,q}^{p/q}; coincides with tan_{p,q} at p = q.
double tau_pq(const ParamPair& pq, double x);

/// cos value from a known sine value: (1 - s^q)^{1/p}, with 1 - s^q formed
/// via expm1/log so no accuracy is lost as s -> 1.
double cos_from_sin(const ParamPair& pq, double sin_value);

/// cosh value from a known sinh value: (1 + s^q)^{1/p}.
double cosh_from_sinh(const ParamPair& pq, double sinh_value);

}  // namespace gentrig
