#pragma once

#include <string>
#include <vector>

#include "gentrig/params.hpp"

namespace gentrig {

/// Verification record for one check. Residual checks pass iff
/// max_residual <= tolerance; strictness (inequality) checks pass iff the
/// worst margin stays above the tolerance (fixed strictness floor 1e-13).
struct CheckReport {
  enum class Kind { residual, strict };

  std::string name;
  std::string grid_spec;
  Kind kind = Kind::residual;
  double max_residual = 0.0;  // worst |lhs-rhs| (residual) or worst margin (strict)
  double worst_point = 0.0;
  double tolerance = 0.0;
  bool passed = false;

  /// One line of tab-separated fields: name, grid, kind, max_residual,
  /// worst_point, tolerance, PASS/FAIL.
  std::string to_line() const;
};

/// Strictness floor for inequality checks: a grid point whose margin falls
/// inside (-eps, eps) is indeterminate in floating point and is not counted
/// as a violation.
inline constexpr double kStrictnessMargin = 1e-13;

/// Mitrinovic-Adamovic bound cos^{1/(q+1)} x < sin_{p,q}x / x < 1 on
/// n interior points of (0, pi_{p,q}/2) (window (0,10], log-spaced, when the
/// half period is infinite).
CheckReport check_mai(const ParamPair& pq, int n_points);

/// Hyperbolic analogue cosh^{1/(q+1)} x < sinh_{p,q}x / x < cosh^{p/q} x on
/// (0, pi_{r,q}/2).
CheckReport check_maih(const ParamPair& pq, int n_points);

/// One RK4 sample of the energy-reduced initial value problem
/// u' = (1 - u^q)^{1/p}, u(0) = 0, whose solution is sin_{p,q}.
struct OdeSample {
  double x, u, du;
};

/// Integrate the IVP with `steps` classical RK4 steps up to x_max
/// (x_max <= 0.95 * half period when finite; steps >= 100).
std::vector<OdeSample> ode_oracle_sin(const ParamPair& pq, double x_max,
                                      int steps);

/// Antiderivative checks for int dx/sin_{2,q} and int dx/cos_{2,q}^{2/q} on
/// [a, b]: adaptive quadrature vs the closed forms, evaluated under both
/// argument readings x/2^{2/q} and 2^{2/q}x (the printed one); a finite
/// difference of the candidate antiderivative decides which reading
/// satisfies the derivative identity. Three reports.
std::vector<CheckReport> check_antiderivatives(double q, double a, double b,
                                               double tolerance);

/// Run every registered check in a fixed deterministic order. Residual
/// checks run at min(built-in default, tolerance); strictness checks are
/// tolerance-independent. Failures are data, not errors.
std::vector<CheckReport> run_suite(double tolerance);

/// Same, restricted to checks whose name starts with name_prefix.
/// An unmatched prefix yields an empty list.
std::vector<CheckReport> run_suite(double tolerance,
                                   const std::string& name_prefix);

}  // namespace gentrig
