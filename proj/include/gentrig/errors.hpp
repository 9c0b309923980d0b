#pragma once

#include <stdexcept>
#include <string>

namespace gentrig {

/// Thrown when an iterative solver exhausts its iteration cap (or the
/// bracket collapses to machine resolution) with the residual still above
/// tolerance. Carries the best value found so callers can inspect it.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double best_value, double residual,
                    int iterations)
      : std::runtime_error(what),
        best_value(best_value),
        residual(residual),
        iterations(iterations) {}

  double best_value;
  double residual;
  int iterations;
};

/// A closed-form identity was evaluated at a point where one of its
/// radicands or denominators leaves the positive region. The identity's
/// stated domain is part of the identity; this is a hard error, not NaN.
class formula_domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace gentrig
