#pragma once

#include <limits>

namespace gentrig {

/// Nonnegative extended real. Finite values are strictly positive; the
/// infinite value compares as +inf through value().
class ExtReal {
 public:
  explicit ExtReal(double v);  // requires 0 < v < inf
  static ExtReal infinity() { return ExtReal(); }

  bool is_finite() const { return finite_; }
  double value() const { return value_; }  // +inf when not finite

 private:
  ExtReal() : value_(std::numeric_limits<double>::infinity()), finite_(false) {}
  double value_;
  bool finite_;
};

/// Validated exponent pair: q > 1 and p > q/(q+1), both strict and finite.
/// Every downstream formula assumes these inequalities, so they are checked
/// once here and never again.
class ParamPair {
 public:
  ParamPair(double p, double q);  // throws std::domain_error otherwise

  double p() const { return p_; }
  double q() const { return q_; }

 private:
  double p_, q_;
};

/// Hoelder conjugate p* = p/(p-1); requires p > 1.
double conjugate(double p);

/// Dual exponent r = pq/(pq+p-q), equivalently 1/p + 1/r = 1 + 1/q.
/// Involutive in p for fixed q, and maps (q/(q+1), inf) onto itself.
double r_map(const ParamPair& pq);

/// The dual pair (r(p), q).
ParamPair dual(const ParamPair& pq);

/// Half period pi_{p,q}/2 = (1/q) B(1/p*, 1/q) for p > 1; +inf for p <= 1.
ExtReal half_period(const ParamPair& pq);

}  // namespace gentrig
