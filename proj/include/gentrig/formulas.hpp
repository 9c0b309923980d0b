#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentrig/params.hpp"

namespace gentrig {

/// Keys for every closed-form multiple-angle / double-angle / addition
/// identity in the registry. MAF1_*/MAF2_*/TAU_DOUBLE are families over
/// q > 1; the rest carry fixed parameters in the name.
enum class FormulaId {
  MAF1_SIN,
  MAF1_COS,
  MAF1_SINH,
  MAF1_COSH,
  MAF2_SINH,
  MAF2_COSH,
  MAF2_SIN,
  MAF2_COS,
  DA_SINH_2_6,
  DA_COSH_2_6,
  DA_SIN_3_2_6,
  DA_SIN_3_6,
  DA_SIN_6_5_3,
  DA_SIN_3_2_2,
  DIXON_ADD_SIN,
  DIXON_ADD_COS,
  DIXON_DOUBLE,
  CS_ADD,
  CS_DOUBLE,
  DA_SINH_2_4,
  DA_SIN_2_4,
  DA_SIN_4_3_4,
  TAU_DOUBLE,
};

inline constexpr int kFormulaCount = 23;

const std::vector<FormulaId>& all_formula_ids();
std::string to_string(FormulaId id);
std::optional<FormulaId> formula_from_string(const std::string& name);

/// One evaluation of an identity: closed form vs direct inversion-based
/// evaluation of the other side.
struct FormulaEval {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // |lhs - rhs|
};

/// Multiple-angle step at parameter 2 (trig) resp. 2q/(q+2) (hyp), both
/// from single-angle values at the conjugate pair. Valid for
/// x in [0, pi_{q*,q}/4):
///   sin_{2,q}(2^{2/q}x)          = 2^{2/q} sin_{q*,q}x cos_{q*,q}^{q*-1}x
///   cos_{2,q}(2^{2/q}x)          = cos_{q*,q}^{q*}x - sin_{q*,q}^q x
///   sinh_{2q/(q+2),q}(2^{2/q}x)  = 2^{2/q} sinh_{q/2,q}x (1-sinh_{q/2,q}^q x)^{-2/q}
///   cosh_{2q/(q+2),q}(2^{2/q}x)  = ((1+sinh^q)/(1-sinh^q))^{2/q+1}
struct Maf1Result {
  double sin2q, cos2q, sinh2q, cosh2q;
};
Maf1Result maf1(double q, double x);

/// Hyperbolic multiple-angle counterpart, for x in [0, pi_{q/2,q}/2):
///   sinh_{2,q}(2^{2/q}x)        = 2^{2/q} sinh_{q*,q}x cosh_{q*,q}^{q*-1}x
///   cosh_{2,q}(2^{2/q}x)        = cosh_{q*,q}^{q*}x + sinh_{q*,q}^q x
///   sin_{2q/(q+2),q}(2^{2/q}x)  = 2^{2/q} sin_{q/2,q}x (1+sin_{q/2,q}^q x)^{-2/q}
///   cos_{2q/(q+2),q}(2^{2/q}x)  = ((1-sin^q)/(1+sin^q))^{2/q+1}
struct Maf2Result {
  double sinh2q, cosh2q, sin2q, cos2q;
};
Maf2Result maf2(double q, double x);

/// Evaluate one single-argument identity from the registry at x; lhs is the
/// closed form, rhs the direct evaluation at the doubled (scaled) argument.
/// The two-argument ids (DIXON_ADD_*, CS_ADD) go through dixon_add /
/// cox_shurman_add instead and this throws std::invalid_argument for them.
FormulaEval double_angle(FormulaId id, double x);
/// Overload for the q-parametrised families (MAF1_*, MAF2_*, TAU_DOUBLE).
FormulaEval double_angle(FormulaId id, double x, double q);

/// The three scalar maps of the sin_{3/2,2} double-angle theorem, all on
/// [0, 1]. Phi(Phi^{-1}(x)) = x.
struct PhiPsiResult {
  double phi, psi, phi_inv;
};
PhiPsiResult phi_psi(double x);

/// Dixon addition theorem for (3/2,3). u == v (exact float equality)
/// dispatches to the doubling forms; nearly equal distinct arguments make
/// the addition form 0/0 and raise formula_domain_error.
/// cos_sum is cos_{3/2,3}(u+v), i.e. the printed cos^{1/2} form squared.
struct DixonAddResult {
  double sin_sum, cos_sum;
};
DixonAddResult dixon_add(double u, double v);

/// Cox-Shurman addition theorem for sin_{2,3} on x, y, x+y in [0, pi_{2,3});
/// x == y dispatches to the doubling form (x < pi_{2,3}/2).
double cox_shurman_add(double x, double y);

/// Residual sweep of one identity over n interior points of its registered
/// domain (for the parametrised families: spread over q in {2,3,4,6}).
struct FormulaSweep {
  FormulaId id;
  std::string grid;
  double max_residual = 0.0;
  double worst_point = 0.0;
  int points = 0;
};
FormulaSweep sweep_formula(FormulaId id, int n_points);

}  // namespace gentrig
