#include "gentrig/gtf.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

#include "gentrig/errors.hpp"
#include "gentrig/quadrature.hpp"

namespace gentrig {

namespace {

constexpr int kMaxIterations = 200;
// Within this distance of the half period the inverse is either not
// representable or carries silent precision loss; reject instead.
constexpr double kEndpointGuard = 1e-12;

// Aim an order below the acceptance threshold; the quadrature noise floor
// sits near 2e-14 * (1 + |x|), so this is comfortably reachable.
double residual_target(double x) { return 2e-13 * (1.0 + std::abs(x)); }
double residual_accept(double x) { return 1e-11 * (1.0 + std::abs(x)); }

}  // namespace

double cos_from_sin(const ParamPair& pq, double sin_value) {
  if (sin_value <= 0.0) return 1.0;
  if (sin_value >= 1.0) return 0.0;
  const double s = -std::expm1(pq.q() * log_unit(sin_value));  // 1 - sin^q
  if (s <= 0.0) return 0.0;
  return std::exp(std::log(s) / pq.p());
}

double cosh_from_sinh(const ParamPair& pq, double sinh_value) {
  if (sinh_value <= 0.0) return 1.0;
  const double e = pq.q() * std::log(sinh_value);
  if (e > 700.0) return std::exp(e / pq.p());  // sinh^q overflows; ~ s^{q/p}
  return std::exp(std::log1p(std::exp(e)) / pq.p());
}

EvalResult sin_pq(const ParamPair& pq, double x) {
  if (!std::isfinite(x) || x < 0.0)
    throw std::domain_error("sin_pq: requires finite x >= 0");
  const ExtReal h = half_period(pq);
  if (h.is_finite() && x > h.value() - kEndpointGuard)
    throw std::domain_error(
        "sin_pq: x must stay below the half period pi_{p,q}/2 by at least "
        "1e-12 (got x = " +
        std::to_string(x) + ", pi/2 = " + std::to_string(h.value()) + ")");
  if (x == 0.0) return {0.0, 0.0, 0};

  const double tol = residual_target(x);
  double lo = 0.0;               // F(lo) = 0 <= x
  double hi = 1.0 - 1e-15;       // representable ceiling of the range
  double y = h.is_finite() ? x / h.value() : std::tanh(x);
  if (!(y > lo && y < hi)) y = 0.5 * (lo + hi);

  double best_y = y;
  double best_res = std::numeric_limits<double>::infinity();
  int it = 0;
  for (; it < kMaxIterations; ++it) {
    const double res = integral_f(pq, y).value - x;
    if (std::abs(res) < best_res) {
      best_res = std::abs(res);
      best_y = y;
    }
    if (std::abs(res) <= tol) break;
    (res < 0.0 ? lo : hi) = y;
    // Newton: F'(y) = (1 - y^q)^{-1/p}, so dy = res * (1 - y^q)^{1/p}.
    double next = y - res * cos_from_sin(pq, y);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == y) break;  // bracket exhausted at machine resolution
    y = next;
  }
  if (best_res <= residual_accept(x)) return {best_y, best_res, it};
  char msg[256];
  std::snprintf(msg, sizeof msg,
                "sin_pq(p=%g, q=%g, x=%.17g): residual %.3e above tolerance "
                "after %d iterations (saturated this close to the half "
                "period: no double y can do better)",
                pq.p(), pq.q(), x, best_res, it);
  throw convergence_error(msg, best_y, best_res, it);
}

EvalResult cos_pq(const ParamPair& pq, double x) {
  if (x == 0.0) return {1.0, 0.0, 0};
  EvalResult s = sin_pq(pq, x);
  s.value = cos_from_sin(pq, s.value);
  return s;
}

EvalResult sinh_pq(const ParamPair& pq, double x) {
  if (!std::isfinite(x) || x < 0.0)
    throw std::domain_error("sinh_pq: requires finite x >= 0");
  const ExtReal h = half_period(dual(pq));
  if (h.is_finite() && x > h.value() - kEndpointGuard)
    throw std::domain_error(
        "sinh_pq: x must stay below pi_{r,q}/2 by at least 1e-12 (got x = " +
        std::to_string(x) + ", pi_{r,q}/2 = " + std::to_string(h.value()) +
        ")");
  if (x == 0.0) return {0.0, 0.0, 0};

  const double tol = residual_target(x);
  double lo = x;  // G(y) <= y, so y = x brackets from below
  double hi = std::max(2.0 * x, 1.0);
  for (int d = 0; integral_g(pq, hi).value < x; ++d) {
    if (d > 1100 || !std::isfinite(hi))
      throw convergence_error("sinh_pq: no finite upper bracket", hi, x, d);
    hi *= 2.0;
  }

  double y = lo;
  double best_y = y;
  double best_res = std::numeric_limits<double>::infinity();
  int it = 0;
  for (; it < kMaxIterations; ++it) {
    const double res = integral_g(pq, y).value - x;
    if (std::abs(res) < best_res) {
      best_res = std::abs(res);
      best_y = y;
    }
    if (std::abs(res) <= tol) break;
    (res < 0.0 ? lo : hi) = y;
    // Newton: G'(y) = (1 + y^q)^{-1/p}, so dy = res * (1 + y^q)^{1/p}.
    const double step = res * cosh_from_sinh(pq, y);
    double next = y - step;
    if (!std::isfinite(next) || !(next > lo && next < hi))
      next = 0.5 * (lo + hi);
    if (next == y) break;
    y = next;
  }
  if (best_res <= residual_accept(x)) return {best_y, best_res, it};
  char msg[256];
  std::snprintf(msg, sizeof msg,
                "sinh_pq(p=%g, q=%g, x=%.17g): residual %.3e above tolerance "
                "after %d iterations",
                pq.p(), pq.q(), x, best_res, it);
  throw convergence_error(msg, best_y, best_res, it);
}

EvalResult cosh_pq(const ParamPair& pq, double x) {
  if (x == 0.0) return {1.0, 0.0, 0};
  EvalResult s = sinh_pq(pq, x);
  s.value = cosh_from_sinh(pq, s.value);
  return s;
}

double tan_pq(const ParamPair& pq, double x) {
  const EvalResult s = sin_pq(pq, x);
  if (s.value == 0.0) return 0.0;
  return s.value / cos_from_sin(pq, s.value);
}

double tau_pq(const ParamPair& pq, double x) {
  const EvalResult s = sin_pq(pq, x);
  if (s.value == 0.0) return 0.0;
  const double c = cos_from_sin(pq, s.value);
  return s.value * std::exp(-(pq.p() / pq.q()) * log_unit(c));
}

}  // namespace gentrig
