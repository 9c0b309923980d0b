#include "gentrig/formulas.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentrig/errors.hpp"
#include "gentrig/gtf.hpp"
#include "gentrig/quadrature.hpp"

namespace gentrig {

namespace {

const ParamPair kPair23(2.0, 3.0);
const ParamPair kPairDixon(1.5, 3.0);

double quarter_period(const ParamPair& pq) {
  return half_period(pq).value() / 2.0;
}

// sin_{2,3} and signed cos_{2,3} on the full period [0, pi_{2,3}). Beyond
// the half period via the reflection sin(pi - x) = sin(x),
// cos(pi - x) = -cos(x); cos enters the addition formulas only through
// integer powers there, so the sign is all that matters.
void sin_cos_23_full(double x, double& s, double& c) {
  static const double kHalf = half_period(kPair23).value();
  const double period = 2.0 * kHalf;
  if (!(x >= 0.0) || x >= period)
    throw std::domain_error(
        "sin_{2,3}: full-period evaluation requires 0 <= x < pi_{2,3}");
  if (std::abs(x - kHalf) <= 1e-11) {  // half-period limit: sin = 1, cos = 0
    s = 1.0;
    c = 0.0;
    return;
  }
  if (x < kHalf) {
    s = sin_pq(kPair23, x).value;
    c = cos_from_sin(kPair23, s);
  } else {
    s = sin_pq(kPair23, period - x).value;
    c = -cos_from_sin(kPair23, s);
  }
}

double phi_map(double x) {
  const double s = std::sqrt(1.0 - x * x * x);
  const double inner = (2.0 - 2.0 * x * x + 2.0 * s) / (2.0 + x * x + 2.0 * s);
  return std::sqrt(std::max(0.0, 1.0 - inner * inner * inner));
}

double psi_map(double x) {
  const double s = std::sqrt(1.0 - x * x * x);
  const double t = 3.0 + s;
  const double d = 8.0 + x * x * x;
  return 4.0 * x * s * t * t * t / ((1.0 + s) * d * d);
}

double phi_inv_map(double x) {
  const double c = std::cbrt(1.0 - x * x);
  const double n = 1.0 - c;
  const double d = 2.0 + c;
  return (6.0 * x - 2.0 * n * n) / (d * d);
}

void require_in_window(FormulaId id, double x, double x_sup) {
  if (!std::isfinite(x) || x < 0.0 || x >= x_sup)
    throw std::domain_error("formula " + to_string(id) +
                            ": x outside [0, " + std::to_string(x_sup) + ")");
}

FormulaEval make_eval(double lhs, double rhs) {
  return {lhs, rhs, std::abs(lhs - rhs)};
}

bool is_parametrised(FormulaId id) {
  switch (id) {
    case FormulaId::MAF1_SIN:
    case FormulaId::MAF1_COS:
    case FormulaId::MAF1_SINH:
    case FormulaId::MAF1_COSH:
    case FormulaId::MAF2_SINH:
    case FormulaId::MAF2_COSH:
    case FormulaId::MAF2_SIN:
    case FormulaId::MAF2_COS:
    case FormulaId::TAU_DOUBLE:
      return true;
    default:
      return false;
  }
}

bool is_two_argument(FormulaId id) {
  return id == FormulaId::DIXON_ADD_SIN || id == FormulaId::DIXON_ADD_COS ||
         id == FormulaId::CS_ADD;
}

}  // namespace

const std::vector<FormulaId>& all_formula_ids() {
  static const std::vector<FormulaId> ids = {
      FormulaId::MAF1_SIN,     FormulaId::MAF1_COS,    FormulaId::MAF1_SINH,
      FormulaId::MAF1_COSH,    FormulaId::MAF2_SINH,   FormulaId::MAF2_COSH,
      FormulaId::MAF2_SIN,     FormulaId::MAF2_COS,    FormulaId::DA_SINH_2_6,
      FormulaId::DA_COSH_2_6,  FormulaId::DA_SIN_3_2_6, FormulaId::DA_SIN_3_6,
      FormulaId::DA_SIN_6_5_3, FormulaId::DA_SIN_3_2_2, FormulaId::DIXON_ADD_SIN,
      FormulaId::DIXON_ADD_COS, FormulaId::DIXON_DOUBLE, FormulaId::CS_ADD,
      FormulaId::CS_DOUBLE,    FormulaId::DA_SINH_2_4, FormulaId::DA_SIN_2_4,
      FormulaId::DA_SIN_4_3_4, FormulaId::TAU_DOUBLE,
  };
  return ids;
}

std::string to_string(FormulaId id) {
  switch (id) {
    case FormulaId::MAF1_SIN: return "MAF1_SIN";
    case FormulaId::MAF1_COS: return "MAF1_COS";
    case FormulaId::MAF1_SINH: return "MAF1_SINH";
    case FormulaId::MAF1_COSH: return "MAF1_COSH";
    case FormulaId::MAF2_SINH: return "MAF2_SINH";
    case FormulaId::MAF2_COSH: return "MAF2_COSH";
    case FormulaId::MAF2_SIN: return "MAF2_SIN";
    case FormulaId::MAF2_COS: return "MAF2_COS";
    case FormulaId::DA_SINH_2_6: return "DA_SINH_2_6";
    case FormulaId::DA_COSH_2_6: return "DA_COSH_2_6";
    case FormulaId::DA_SIN_3_2_6: return "DA_SIN_3_2_6";
    case FormulaId::DA_SIN_3_6: return "DA_SIN_3_6";
    case FormulaId::DA_SIN_6_5_3: return "DA_SIN_6_5_3";
    case FormulaId::DA_SIN_3_2_2: return "DA_SIN_3_2_2";
    case FormulaId::DIXON_ADD_SIN: return "DIXON_ADD_SIN";
    case FormulaId::DIXON_ADD_COS: return "DIXON_ADD_COS";
    case FormulaId::DIXON_DOUBLE: return "DIXON_DOUBLE";
    case FormulaId::CS_ADD: return "CS_ADD";
    case FormulaId::CS_DOUBLE: return "CS_DOUBLE";
    case FormulaId::DA_SINH_2_4: return "DA_SINH_2_4";
    case FormulaId::DA_SIN_2_4: return "DA_SIN_2_4";
    case FormulaId::DA_SIN_4_3_4: return "DA_SIN_4_3_4";
    case FormulaId::TAU_DOUBLE: return "TAU_DOUBLE";
  }
  return "UNKNOWN";
}

std::optional<FormulaId> formula_from_string(const std::string& name) {
  for (FormulaId id : all_formula_ids())
    if (to_string(id) == name) return id;
  return std::nullopt;
}

Maf1Result maf1(double q, double x) {
  if (!std::isfinite(q) || !(q > 1.0))
    throw std::domain_error("maf1: requires q > 1");
  const double qs = conjugate(q);
  const ParamPair conj_pair(qs, q);
  const ParamPair half_pair(0.5 * q, q);
  const double x_sup = quarter_period(conj_pair);  // pi_{q*,q}/4
  require_in_window(FormulaId::MAF1_SIN, x, x_sup);
  if (x == 0.0) return {0.0, 1.0, 0.0, 1.0};

  const double tw = std::pow(2.0, 2.0 / q);
  const double s = sin_pq(conj_pair, x).value;
  const double c = cos_from_sin(conj_pair, s);
  Maf1Result out;
  out.sin2q = tw * s * std::pow(c, qs - 1.0);
  out.cos2q = std::pow(c, qs) - std::pow(s, q);

  const double sh = sinh_pq(half_pair, x).value;
  const double shq = std::pow(sh, q);
  if (shq >= 1.0)
    throw formula_domain_error("maf1: sinh_{q/2,q}^q x must stay below 1");
  out.sinh2q = tw * sh / std::pow(1.0 - shq, 2.0 / q);
  out.cosh2q = std::pow((1.0 + shq) / (1.0 - shq), 2.0 / q + 1.0);
  return out;
}

Maf2Result maf2(double q, double x) {
  if (!std::isfinite(q) || !(q > 1.0))
    throw std::domain_error("maf2: requires q > 1");
  const double qs = conjugate(q);
  const ParamPair conj_pair(qs, q);
  const ParamPair half_pair(0.5 * q, q);
  const ExtReal hp = half_period(half_pair);  // domain sup pi_{q/2,q}/2
  if (!std::isfinite(x) || x < 0.0 || (hp.is_finite() && x >= hp.value()))
    throw std::domain_error("maf2: x outside [0, pi_{q/2,q}/2)");
  if (x == 0.0) return {0.0, 1.0, 0.0, 1.0};

  const double tw = std::pow(2.0, 2.0 / q);
  const double sh = sinh_pq(conj_pair, x).value;
  const double ch = cosh_from_sinh(conj_pair, sh);
  Maf2Result out;
  out.sinh2q = tw * sh * std::pow(ch, qs - 1.0);
  out.cosh2q = std::pow(ch, qs) + std::pow(sh, q);

  const double s = sin_pq(half_pair, x).value;
  const double sq = std::pow(s, q);
  out.sin2q = tw * s / std::pow(1.0 + sq, 2.0 / q);
  out.cos2q = std::pow((1.0 - sq) / (1.0 + sq), 2.0 / q + 1.0);
  return out;
}

PhiPsiResult phi_psi(double x) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0)
    throw std::domain_error("phi_psi: requires x in [0, 1]");
  return {phi_map(x), psi_map(x), phi_inv_map(x)};
}

DixonAddResult dixon_add(double u, double v) {
  const double half = half_period(kPairDixon).value();  // pi_{3/2,3}/2
  if (!std::isfinite(u) || !std::isfinite(v) || u < 0.0 || v < 0.0 ||
      u >= half || v >= half || u + v >= half)
    throw std::domain_error(
        "dixon_add: requires u, v, u+v in [0, pi_{3/2,3}/2)");

  if (u == v) {
    // Doubling forms. The printed cos denominator cos^{3/2}u(1+sin^3 u) is a
    // typo for cos^{1/2}u(1+sin^3 u); with it the identity fails by ~4e-2
    // while the corrected form verifies to quadrature accuracy (see tests).
    if (u == 0.0) return {0.0, 1.0};
    const double s = sin_pq(kPairDixon, u).value;
    const double c = cos_from_sin(kPairDixon, s);
    const double sc = std::sqrt(c);
    const double s3 = s * s * s;
    const double sin_dbl = s * (1.0 + c * sc) / (sc * (1.0 + s3));
    const double cos_half_dbl = (c * sc - s3) / (sc * (1.0 + s3));
    return {sin_dbl, cos_half_dbl * cos_half_dbl};
  }

  const double su = sin_pq(kPairDixon, u).value;
  const double cu = cos_from_sin(kPairDixon, su);
  const double sv = sin_pq(kPairDixon, v).value;
  const double cv = cos_from_sin(kPairDixon, sv);
  const double den = su * cv - cu * sv;
  if (std::abs(den) < 1e-14)
    throw formula_domain_error(
        "dixon_add: nearly equal arguments make the addition form 0/0; call "
        "the doubling form explicitly");
  const double sin_sum = (su * su * std::sqrt(cv) - std::sqrt(cu) * sv * sv) / den;
  const double cos_half = (su * std::sqrt(cu) - std::sqrt(cv) * sv) / den;
  return {sin_sum, cos_half * cos_half};
}

double cox_shurman_add(double x, double y) {
  static const double kHalf = half_period(kPair23).value();
  const double period = 2.0 * kHalf;
  if (!std::isfinite(x) || !std::isfinite(y) || x < 0.0 || y < 0.0 ||
      x >= period || y >= period || x + y >= period)
    throw std::domain_error(
        "cox_shurman_add: requires x, y, x+y in [0, pi_{2,3})");

  if (x == y) {
    // x + y < period already pins x below pi_{2,3}/2 here
    if (x == 0.0) return 0.0;
    const double s = sin_pq(kPair23, x).value;
    const double c = cos_from_sin(kPair23, s);
    const double t = 3.0 + c;
    const double d = 8.0 + s * s * s;
    return 4.0 * s * c * t * t * t / ((1.0 + c) * d * d);
  }

  double sx, cx, sy, cy;
  sin_cos_23_full(x, sx, cx);
  sin_cos_23_full(y, sy, cy);
  const double num =
      2.0 * (sx - sy) * ((1.0 - cx) * (1.0 + cy) - sx * sy * sy);
  const double den = (1.0 - cx) * (1.0 + cy) * (1.0 + cy) -
                     2.0 * sx * sx * sy * (1.0 + cy) +
                     sx * sy * sy * (1.0 + cx);
  if (std::abs(den) < 1e-14)
    throw formula_domain_error(
        "cox_shurman_add: nearly equal arguments make the addition form 0/0");
  return num / den;
}

FormulaEval double_angle(FormulaId id, double x) {
  if (is_parametrised(id))
    throw std::invalid_argument("double_angle: " + to_string(id) +
                                " needs the explicit-q overload");
  if (is_two_argument(id))
    throw std::invalid_argument("double_angle: " + to_string(id) +
                                " takes two arguments; use dixon_add / "
                                "cox_shurman_add");

  switch (id) {
    case FormulaId::DA_SINH_2_6: {
      const ParamPair pq(2.0, 6.0);
      require_in_window(id, x, quarter_period(dual(pq)));  // pi_{3/2,6}/4
      if (x == 0.0) return make_eval(0.0, 0.0);
      const double s = sinh_pq(pq, x).value;
      const double c = cosh_from_sinh(pq, s);
      const double s6 = std::pow(s, 6);
      const double rad = 1.0 - 8.0 * s6;
      if (rad <= 0.0)
        throw formula_domain_error("DA_SINH_2_6: 1 - 8 sinh^6 x <= 0");
      return make_eval(2.0 * s * c / std::sqrt(rad), sinh_pq(pq, 2.0 * x).value);
    }
    case FormulaId::DA_COSH_2_6: {
      const ParamPair pq(2.0, 6.0);
      require_in_window(id, x, quarter_period(dual(pq)));
      if (x == 0.0) return make_eval(1.0, 1.0);
      const double s = sinh_pq(pq, x).value;
      const double s6 = std::pow(s, 6);
      const double rad = 1.0 - 8.0 * s6;
      if (rad <= 0.0)
        throw formula_domain_error("DA_COSH_2_6: 1 - 8 sinh^6 x <= 0");
      const double lhs =
          (1.0 + 20.0 * s6 - 8.0 * s6 * s6) / (rad * std::sqrt(rad));
      return make_eval(lhs, cosh_pq(pq, 2.0 * x).value);
    }
    case FormulaId::DA_SIN_3_2_6: {
      const ParamPair pq(1.5, 6.0);
      require_in_window(id, x, quarter_period(pq));
      if (x == 0.0) return make_eval(0.0, 0.0);
      const double s = sin_pq(pq, x).value;
      const double s6 = std::pow(s, 6);
      const double base = 1.0 + 18.0 * s6 - 27.0 * s6 * s6;
      if (base <= 0.0)
        throw formula_domain_error("DA_SIN_3_2_6: radicand <= 0");
      return make_eval(2.0 * s / std::cbrt(base), sin_pq(pq, 2.0 * x).value);
    }
    case FormulaId::DA_SIN_3_6: {
      const ParamPair pq(3.0, 6.0);
      require_in_window(id, x, quarter_period(pq));
      if (x == 0.0) return make_eval(0.0, 0.0);
      const double s = sin_pq(pq, x).value;
      const double s3 = s * s * s;
      const double s6 = s3 * s3;
      const double r1 = 1.0 + 6.0 * s3 + s6;
      const double r2 = 1.0 - 6.0 * s3 + s6;
      if (r2 < 0.0)
        throw formula_domain_error("DA_SIN_3_6: 1 - 6s^3 + s^6 < 0");
      // Factored radicands as printed; the expanded dodecic cancels badly.
      const double den =
          (1.0 - s3) * r1 * std::sqrt(r1) + (1.0 + s3) * r2 * std::sqrt(r2);
      const double lhs =
          std::pow(2.0, 5.0 / 3.0) * s * (1.0 + s6) / std::cbrt(den * den);
      return make_eval(lhs, sin_pq(pq, 2.0 * x).value);
    }
    case FormulaId::DA_SIN_6_5_3: {
      const ParamPair pq(1.2, 3.0);
      require_in_window(id, x, quarter_period(pq));
      if (x == 0.0) return make_eval(0.0, 0.0);
      const double c = cos_pq(pq, x).value;
      const double lc = log_unit(c);
      const double c15 = std::exp(lc / 5.0);        // c^{1/5}
      const double c35 = std::exp(3.0 * lc / 5.0);  // c^{3/5}
      const double c65 = c35 * c35;                 // c^{6/5}
      const double c125 = c65 * c65;                // c^{12/5}
      const double base = 1.0 + 24.0 * c35 + 18.0 * c65 - 27.0 * c125;
      if (base <= 0.0)
        throw formula_domain_error("DA_SIN_6_5_3: denominator base <= 0");
      const double lhs = 4.0 * c15 * (1.0 + 3.0 * c35) *
                         std::cbrt(std::max(0.0, 1.0 - c35)) /
                         std::cbrt(base * base);
      return make_eval(lhs, sin_pq(pq, 2.0 * x).value);
    }
    case FormulaId::DA_SIN_3_2_2: {
      const ParamPair pq(1.5, 2.0);
      require_in_window(id, x, quarter_period(pq));
      if (x == 0.0) return make_eval(0.0, 0.0);
      const double s = sin_pq(pq, x).value;
      const double lhs = phi_map(psi_map(phi_inv_map(s)));
      return make_eval(lhs, sin_pq(pq, 2.0 * x).value);
    }
    case FormulaId::DIXON_DOUBLE: {
      require_in_window(id, x, quarter_period(kPairDixon));
      if (x == 0.0) return make_eval(0.0, 0.0);
      const double s = sin_pq(kPairDixon, x).value;
      const double c = cos_from_sin(kPairDixon, s);
      const double sc = std::sqrt(c);
      const double lhs =
          s * (1.0 + c * sc) / (sc * (1.0 + s * s * s));
      return make_eval(lhs, sin_pq(kPairDixon, 2.0 * x).value);
    }
    case FormulaId::CS_DOUBLE: {
      const double half = half_period(kPair23).value();
      require_in_window(id, x, half);
      if (x == 0.0) return make_eval(0.0, 0.0);
      const double lhs = cox_shurman_add(x, x);
      double s2, c2;
      sin_cos_23_full(2.0 * x, s2, c2);
      return make_eval(lhs, s2);
    }
    case FormulaId::DA_SINH_2_4: {
      const ParamPair pq(2.0, 4.0);
      require_in_window(id, x, quarter_period(dual(pq)));  // pi_{4/3,4}/4
      if (x == 0.0) return make_eval(0.0, 0.0);
      const double s = sinh_pq(pq, x).value;
      const double c = cosh_from_sinh(pq, s);
      const double s4 = std::pow(s, 4);
      if (s4 >= 1.0)
        throw formula_domain_error("DA_SINH_2_4: 1 - sinh^4 x <= 0");
      return make_eval(2.0 * s * c / (1.0 - s4), sinh_pq(pq, 2.0 * x).value);
    }
    case FormulaId::DA_SIN_2_4: {
      const ParamPair pq(2.0, 4.0);
      require_in_window(id, x, quarter_period(pq));
      if (x == 0.0) return make_eval(0.0, 0.0);
      const double s = sin_pq(pq, x).value;
      const double c = cos_from_sin(pq, s);
      const double s4 = std::pow(s, 4);
      return make_eval(2.0 * s * c / (1.0 + s4), sin_pq(pq, 2.0 * x).value);
    }
    case FormulaId::DA_SIN_4_3_4: {
      const ParamPair pq(4.0 / 3.0, 4.0);
      require_in_window(id, x, quarter_period(pq));
      if (x == 0.0) return make_eval(0.0, 0.0);
      const double s = sin_pq(pq, x).value;
      const double c = cos_from_sin(pq, s);
      const double c13 = std::cbrt(c);
      const double s4 = std::pow(s, 4);
      const double lhs = 2.0 * s * c13 /
                         std::sqrt(1.0 + 4.0 * s4 * c13 * c13 * c13 * c13);
      return make_eval(lhs, sin_pq(pq, 2.0 * x).value);
    }
    default:
      throw std::invalid_argument("double_angle: unhandled id");
  }
}

FormulaEval double_angle(FormulaId id, double x, double q) {
  if (!is_parametrised(id)) return double_angle(id, x);
  if (!std::isfinite(q) || !(q > 1.0))
    throw std::domain_error("double_angle: requires q > 1");
  const double tw = std::pow(2.0, 2.0 / q);
  const double q2p = 2.0 * q / (q + 2.0);

  switch (id) {
    case FormulaId::MAF1_SIN:
      return make_eval(maf1(q, x).sin2q,
                       x == 0.0 ? 0.0 : sin_pq(ParamPair(2.0, q), tw * x).value);
    case FormulaId::MAF1_COS:
      return make_eval(maf1(q, x).cos2q,
                       cos_pq(ParamPair(2.0, q), tw * x).value);
    case FormulaId::MAF1_SINH:
      return make_eval(maf1(q, x).sinh2q,
                       x == 0.0 ? 0.0 : sinh_pq(ParamPair(q2p, q), tw * x).value);
    case FormulaId::MAF1_COSH:
      return make_eval(maf1(q, x).cosh2q,
                       cosh_pq(ParamPair(q2p, q), tw * x).value);
    case FormulaId::MAF2_SINH:
      return make_eval(maf2(q, x).sinh2q,
                       x == 0.0 ? 0.0 : sinh_pq(ParamPair(2.0, q), tw * x).value);
    case FormulaId::MAF2_COSH:
      return make_eval(maf2(q, x).cosh2q,
                       cosh_pq(ParamPair(2.0, q), tw * x).value);
    case FormulaId::MAF2_SIN:
      return make_eval(maf2(q, x).sin2q,
                       x == 0.0 ? 0.0 : sin_pq(ParamPair(q2p, q), tw * x).value);
    case FormulaId::MAF2_COS:
      return make_eval(maf2(q, x).cos2q,
                       cos_pq(ParamPair(q2p, q), tw * x).value);
    case FormulaId::TAU_DOUBLE: {
      const double qs = conjugate(q);
      const ParamPair conj_pair(qs, q);
      require_in_window(id, x, quarter_period(conj_pair));
      if (x == 0.0) return make_eval(0.0, 0.0);
      const double t = tau_pq(conj_pair, x);
      const double tq = std::pow(t, q);
      if (tq >= 1.0)
        throw formula_domain_error("TAU_DOUBLE: tau^q must stay below 1");
      const double lhs = tw * t / std::pow(1.0 - tq, 2.0 / q);
      return make_eval(lhs, tau_pq(ParamPair(2.0, q), tw * x));
    }
    default:
      throw std::invalid_argument("double_angle: unhandled id");
  }
}

namespace {

// Interior sweep grid: linear fractions of a finite window, log-spaced
// points of (0.01, 2.5] when the window is infinite. Finite windows carry a
// 5% safety margin: at the very top of a doubling window the doubled-side
// sine saturates past the double-precision inversion floor for p near 1.
std::vector<double> sweep_points(double sup, bool finite, int m) {
  std::vector<double> xs;
  xs.reserve(m);
  if (finite) {
    for (int i = 0; i < m; ++i)
      xs.push_back(0.95 * sup * (i + 1) / (m + 1.0));
  } else {
    const double lo = std::log(0.01), hi = std::log(2.5);
    for (int i = 0; i < m; ++i)
      xs.push_back(std::exp(lo + (hi - lo) * (i + 1) / static_cast<double>(m)));
  }
  return xs;
}

}  // namespace

FormulaSweep sweep_formula(FormulaId id, int n_points) {
  if (n_points < 1)
    throw std::invalid_argument("sweep_formula: n_points >= 1");
  FormulaSweep out;
  out.id = id;
  auto record = [&out](double point, double residual) {
    if (residual > out.max_residual) {
      out.max_residual = residual;
      out.worst_point = point;
    }
    ++out.points;
  };

  if (is_parametrised(id)) {
    const double qs[] = {2.0, 3.0, 4.0, 6.0};
    const int m = std::max(1, n_points / 4);
    for (double q : qs) {
      const double tw = std::pow(2.0, 2.0 / q);
      double sup;
      bool finite = true;
      if (id == FormulaId::MAF2_SINH || id == FormulaId::MAF2_COSH ||
          id == FormulaId::MAF2_SIN || id == FormulaId::MAF2_COS) {
        const ExtReal hp = half_period(ParamPair(0.5 * q, q));
        finite = hp.is_finite();
        // sinh_{2,q}(2^{2/q}x) diverges at the window end; keep it below
        // 10^{3/q} so an absolute 1e-9 on cosh stays meaningful in doubles.
        const double mag_cap =
            integral_g(ParamPair(2.0, q), std::pow(10.0, 3.0 / q)).value / tw;
        sup = finite ? std::min(hp.value(), mag_cap) : mag_cap;
        finite = true;
      } else {  // MAF1_*, TAU_DOUBLE: [0, pi_{q*,q}/4)
        sup = quarter_period(ParamPair(conjugate(q), q));
        const double mag_cap =
            integral_g(ParamPair(2.0 * q / (q + 2.0), q),
                       std::pow(10.0, 3.0 / q))
                .value /
            tw;
        sup = std::min(sup, mag_cap);
      }
      for (double x : sweep_points(sup, finite, m))
        record(x, double_angle(id, x, q).residual);
    }
    out.grid = std::to_string(m) + " interior points per q in {2,3,4,6}";
    return out;
  }

  if (id == FormulaId::DIXON_ADD_SIN || id == FormulaId::DIXON_ADD_COS) {
    const int m = std::max(2, static_cast<int>(std::round(std::sqrt(n_points))));
    for (int i = 0; i < m; ++i) {
      const double u = 0.8 * (i + 1) / (m + 1.0);
      for (int j = 0; j < m; ++j) {
        const double v = 0.9 * (j + 1) / (m + 2.0);
        if (u == v) continue;
        const DixonAddResult add = dixon_add(u, v);
        const double s = sin_pq(kPairDixon, u + v).value;
        if (id == FormulaId::DIXON_ADD_SIN) {
          record(u + v, std::abs(add.sin_sum - s));
        } else {
          record(u + v, std::abs(add.cos_sum - cos_from_sin(kPairDixon, s)));
        }
      }
    }
    out.grid = std::to_string(m) + "x" + std::to_string(m) +
               " (u,v) grid in (0,0.8]x(0,0.9], u+v < pi_{3/2,3}/2";
    return out;
  }

  if (id == FormulaId::CS_ADD) {
    const int m = std::max(2, static_cast<int>(std::round(std::sqrt(n_points))));
    for (int i = 0; i < m; ++i) {
      const double x = 2.0 * (i + 1) / (m + 1.0);  // crosses the half period
      for (int j = 0; j < m; ++j) {
        const double y = 0.75 * (j + 1) / (m + 2.0);
        if (x == y) continue;
        double s, c;
        sin_cos_23_full(x + y, s, c);
        record(x + y, std::abs(cox_shurman_add(x, y) - s));
      }
    }
    out.grid = std::to_string(m) + "x" + std::to_string(m) +
               " (x,y) grid in (0,2.0]x(0,0.75], x beyond pi_{2,3}/2 included";
    return out;
  }

  // Fixed-parameter single-argument identities.
  double sup = 0.0;
  switch (id) {
    case FormulaId::DA_SINH_2_6:
    case FormulaId::DA_COSH_2_6:
    case FormulaId::DA_SIN_3_2_6:
      sup = quarter_period(ParamPair(1.5, 6.0));
      break;
    case FormulaId::DA_SIN_3_6:
      sup = quarter_period(ParamPair(3.0, 6.0));
      break;
    case FormulaId::DA_SIN_6_5_3:
      sup = quarter_period(ParamPair(1.2, 3.0));
      break;
    case FormulaId::DA_SIN_3_2_2:
      sup = quarter_period(ParamPair(1.5, 2.0));
      break;
    case FormulaId::DIXON_DOUBLE:
      sup = quarter_period(kPairDixon);
      break;
    case FormulaId::CS_DOUBLE:
      sup = half_period(kPair23).value();
      break;
    case FormulaId::DA_SINH_2_4:
      sup = quarter_period(ParamPair(4.0 / 3.0, 4.0));
      break;
    case FormulaId::DA_SIN_2_4:
      sup = quarter_period(ParamPair(2.0, 4.0));
      break;
    case FormulaId::DA_SIN_4_3_4:
      sup = quarter_period(ParamPair(4.0 / 3.0, 4.0));
      break;
    default:
      throw std::invalid_argument("sweep_formula: unhandled id");
  }
  for (double x : sweep_points(sup, true, n_points))
    record(x, double_angle(id, x).residual);
  out.grid = std::to_string(n_points) + " interior points of [0, " +
             std::to_string(sup) + ")";
  return out;
}

}  // namespace gentrig
