#include "gentrig/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gentrig/quadrature.hpp"

namespace gentrig {

ExtReal::ExtReal(double v) : value_(v), finite_(true) {
  if (!std::isfinite(v) || v <= 0.0)
    throw std::domain_error("ExtReal: finite value must be strictly positive");
}

ParamPair::ParamPair(double p, double q) : p_(p), q_(q) {
  if (!std::isfinite(p) || !std::isfinite(q))
    throw std::domain_error("ParamPair: parameters must be finite");
  if (!(q > 1.0))
    throw std::domain_error("ParamPair: requires q > 1, got q = " +
                            std::to_string(q));
  if (!(p > q / (q + 1.0)))
    throw std::domain_error("ParamPair: requires p > q/(q+1) = " +
                            std::to_string(q / (q + 1.0)) +
                            ", got p = " + std::to_string(p));
}

double conjugate(double p) {
  if (!std::isfinite(p) || !(p > 1.0))
    throw std::domain_error("conjugate: p/(p-1) needs p > 1, got p = " +
                            std::to_string(p));
  return p / (p - 1.0);
}

double r_map(const ParamPair& pq) {
  const double p = pq.p(), q = pq.q();
  return p * q / (p * q + p - q);
}

ParamPair dual(const ParamPair& pq) { return ParamPair(r_map(pq), pq.q()); }

ExtReal half_period(const ParamPair& pq) {
  const double p = pq.p(), q = pq.q();
  if (p <= 1.0) return ExtReal::infinity();
  return ExtReal(std::exp(log_beta(1.0 / conjugate(p), 1.0 / q)) / q);
}

}  // namespace gentrig
