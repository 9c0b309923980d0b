#pragma once

// Test-only reference implementations, deliberately independent of the
// library's computational routes (tanh-sinh / Gauss-Kronrod / Lanczos /
// Newton). Everything here is slow and simple on purpose.

#include <functional>

namespace oracle {

// log Gamma via upward recurrence to x >= 12 plus the Stirling/Bernoulli
// series; ~1e-15 relative.
double lgamma_stirling(double x);

// F_{p,q}(y) by composite-midpoint integration after splitting at
// t^q = 1/2 and applying the substitution 1 - t^q = s^p analytically to the
// singular-end piece; Richardson-extrapolated with geometric subdivision
// near s -> 0. Good to ~1e-12 for y <= 0.999.
double f_reference(double p, double q, double y);
double f_reference_n(double p, double q, double y, long base_n);

// Same split and substitution but a flat composite midpoint rule at
// n_total points, no extrapolation.
double f_midpoint(double p, double q, double y, long n_total);

// G_{p,q}(y) by a flat composite midpoint rule (integrand smooth).
double g_midpoint(double p, double q, double y, long n_total);

// Plain bisection solve of increasing(x) = target on [lo, hi].
double bisect_increasing(const std::function<double(double)>& increasing,
                         double target, double lo, double hi);

// sin_{p,q}(x) via bisection on f_reference.
double sin_reference(double p, double q, double x);

// sinh_{p,q}(x) via bisection on g_midpoint (1e6 points).
double sinh_reference(double p, double q, double x);

}  // namespace oracle
