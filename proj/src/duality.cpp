#include "gentrig/duality.hpp"

#include <cmath>

#include "gentrig/gtf.hpp"

namespace gentrig {

HypPair hyp_from_trig(const ParamPair& pq, double x) {
  const ParamPair rq = dual(pq);
  // One inversion on the r-side; its domain [0, pi_{r,q}/2) is exactly the
  // domain of sinh_{p,q}, so the range check happens there.
  const double s = sin_pq(rq, x).value;
  const double c = cos_from_sin(rq, s);
  if (s == 0.0) return {0.0, 1.0};
  const double lc = log_unit(c);
  const double r = rq.p();
  return {s * std::exp(-(r / pq.q()) * lc), std::exp(-(r / pq.p()) * lc)};
}

TrigPair trig_from_hyp(const ParamPair& pq, double x) {
  const ParamPair rq = dual(pq);
  // sinh_{r,q} lives on [0, pi_{r(r),q}/2) = [0, pi_{p,q}/2), as required.
  const double s = sinh_pq(rq, x).value;
  const double c = cosh_from_sinh(rq, s);
  if (s == 0.0) return {0.0, 1.0};
  // cosh >= 1: the shifted log keeps full accuracy as cosh -> 1
  const double lc = std::log1p(c - 1.0);
  const double r = rq.p();
  return {s * std::exp(-(r / pq.q()) * lc), std::exp(-(r / pq.p()) * lc)};
}

}  // namespace gentrig
