#pragma once

#include "gentrig/params.hpp"

namespace gentrig {

struct HypPair {
  double sinh_value;
  double cosh_value;
};

struct TrigPair {
  double sin_value;
  double cos_value;
};

/// Hyperbolic pair at (p,q) from the trigonometric pair at the dual (r,q):
///   sinh_{p,q} x = sin_{r,q} x / cos_{r,q}^{r/q} x,
///   cosh_{p,q} x = cos_{r,q}^{-r/p} x,      x in [0, pi_{r,q}/2).
/// Costs a single inversion on the r-side.
HypPair hyp_from_trig(const ParamPair& pq, double x);

/// Trigonometric pair at (p,q) from the hyperbolic pair at the dual (r,q):
///   sin_{p,q} x = sinh_{r,q} x / cosh_{r,q}^{r/q} x,
///   cos_{p,q} x = cosh_{r,q}^{-r/p} x,      x in [0, pi_{p,q}/2).
TrigPair trig_from_hyp(const ParamPair& pq, double x);

}  // namespace gentrig
