#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gentrig/errors.hpp"
#include "gentrig/formulas.hpp"
#include "gentrig/gtf.hpp"
#include "gentrig/params.hpp"

using namespace gentrig;

TEST_CASE("formula id table") {
  CHECK(all_formula_ids().size() == kFormulaCount);
  for (FormulaId id : all_formula_ids()) {
    const auto round = formula_from_string(to_string(id));
    REQUIRE(round.has_value());
    CHECK(*round == id);
  }
  CHECK(!formula_from_string("NOPE").has_value());
  CHECK(to_string(FormulaId::DA_SIN_3_2_2) == "DA_SIN_3_2_2");
}

TEST_CASE("maf1 reduces to the classical double angle at q = 2") {
  const double x = 0.4;
  const Maf1Result m = maf1(2.0, x);
  CHECK(m.sin2q == doctest::Approx(std::sin(2 * x)).epsilon(1e-11));
  CHECK(m.cos2q == doctest::Approx(std::cos(2 * x)).epsilon(1e-11));
  // sinh_{1,2} = tan, cosh_{1,2} = sec^2
  CHECK(m.sinh2q == doctest::Approx(std::tan(2 * x)).epsilon(1e-11));
  const double c = std::cos(2 * x);
  CHECK(m.cosh2q == doctest::Approx(1.0 / (c * c)).epsilon(1e-11));
}

TEST_CASE("maf1 at q = 4, x = 0.3 against frozen references") {
  const Maf1Result m = maf1(4.0, 0.3);
  CHECK(m.sin2q == doctest::Approx(0.42289315444408151).epsilon(1e-11));
  CHECK(m.cos2q == doctest::Approx(0.98387842133539633).epsilon(1e-11));
  CHECK(m.sinh2q == doctest::Approx(0.4263437857995238).epsilon(1e-11));
  CHECK(m.cosh2q == doctest::Approx(1.0246790254786111).epsilon(1e-11));

  // and against direct inversion of the doubled argument
  const double tw = std::sqrt(2.0);
  CHECK(std::abs(m.sin2q - sin_pq(ParamPair(2, 4), tw * 0.3).value) <= 1e-9);
  CHECK(std::abs(m.cos2q - cos_pq(ParamPair(2, 4), tw * 0.3).value) <= 1e-9);
  CHECK(std::abs(m.sinh2q -
                 sinh_pq(ParamPair(4.0 / 3.0, 4.0), tw * 0.3).value) <= 1e-9);
  CHECK(std::abs(m.cosh2q -
                 cosh_pq(ParamPair(4.0 / 3.0, 4.0), tw * 0.3).value) <= 1e-9);
}

TEST_CASE("maf1/maf2 at zero and domain edges") {
  const Maf1Result m1 = maf1(3.0, 0.0);
  CHECK(m1.sin2q == 0.0);
  CHECK(m1.cos2q == 1.0);
  CHECK(m1.sinh2q == 0.0);
  CHECK(m1.cosh2q == 1.0);
  const Maf2Result m2 = maf2(3.0, 0.0);
  CHECK(m2.sinh2q == 0.0);
  CHECK(m2.cosh2q == 1.0);
  CHECK(m2.sin2q == 0.0);
  CHECK(m2.cos2q == 1.0);

  CHECK_THROWS_AS(maf1(1.0, 0.1), std::domain_error);   // q > 1
  CHECK_THROWS_AS(maf1(3.0, -0.1), std::domain_error);
  const double sup1 = half_period(ParamPair(1.5, 3.0)).value() / 2.0;
  CHECK_THROWS_AS(maf1(3.0, sup1), std::domain_error);   // pi_{q*,q}/4
  const double sup2 = half_period(ParamPair(1.5, 3.0)).value();
  CHECK_THROWS_AS(maf2(3.0, sup2), std::domain_error);   // pi_{q/2,q}/2
  CHECK_NOTHROW(maf2(2.0, 5.0));  // q = 2: infinite window
}

TEST_CASE("maf2 at q = 4, x = 0.3 against frozen references") {
  const Maf2Result m = maf2(4.0, 0.3);
  CHECK(m.sinh2q == doctest::Approx(0.42564240595971984).epsilon(1e-11));
  CHECK(m.cosh2q == doctest::Approx(1.0162790449004088).epsilon(1e-11));
  CHECK(m.sin2q == doctest::Approx(0.42221961364818512).epsilon(1e-11));
  CHECK(m.cos2q == doctest::Approx(0.97606905411103535).epsilon(1e-11));
}

TEST_CASE("maf2 reduces to the classical hyperbolic double angle at q = 2") {
  const double x = 0.5;
  const Maf2Result m = maf2(2.0, x);
  CHECK(m.sinh2q == doctest::Approx(std::sinh(2 * x)).epsilon(1e-11));
  CHECK(m.cosh2q == doctest::Approx(std::cosh(2 * x)).epsilon(1e-11));
  CHECK(m.sin2q == doctest::Approx(std::tanh(2 * x)).epsilon(1e-11));
  const double c = std::cosh(2 * x);
  CHECK(m.cos2q == doctest::Approx(1.0 / (c * c)).epsilon(1e-11));
}

TEST_CASE("maf2 chain consistency through the duality transform") {
  // The trig half follows from the hyperbolic half via
  // sin_{2q/(q+2),q} = sinh_{2,q} / cosh_{2,q}^{2/q}  (r(2q/(q+2)) = 2).
  for (double q : {2.0, 3.0, 6.0}) {
    for (double x : {0.15, 0.4}) {
      const Maf2Result m = maf2(q, x);
      const double sin_via =
          m.sinh2q / std::pow(m.cosh2q, 2.0 / q);
      const double cos_via =
          std::pow(m.cosh2q, -(q + 2.0) / q);  // r/p' = (q+2)/q
      CHECK(std::abs(m.sin2q - sin_via) <= 1e-9);
      CHECK(std::abs(m.cos2q - cos_via) <= 1e-9);
    }
  }
}

TEST_CASE("double_angle frozen spot values at x = 0.35") {
  struct Spot {
    FormulaId id;
    double expected;
  };
  const std::vector<Spot> spots = {
      {FormulaId::DA_SINH_2_6, 0.70594985987380563},
      {FormulaId::DA_COSH_2_6, 1.060083915525808},
      {FormulaId::DA_SIN_3_2_6, 0.69235225014212216},
      {FormulaId::DA_SIN_3_6, 0.69606609551911451},
      {FormulaId::DA_SIN_6_5_3, 0.65475758112389537},
      {FormulaId::DA_SINH_2_4, 0.71715025366984278},
      {FormulaId::DA_SIN_2_4, 0.68352258419179203},
      {FormulaId::DA_SIN_4_3_4, 0.67628486190412751},
  };
  for (const auto& s : spots) {
    const FormulaEval e = double_angle(s.id, 0.35);
    CAPTURE(to_string(s.id));
    CHECK(e.lhs == doctest::Approx(s.expected).epsilon(1e-10));
    CHECK(e.rhs == doctest::Approx(s.expected).epsilon(1e-10));
    CHECK(e.residual <= 1e-9);
  }
}

TEST_CASE("double_angle at zero") {
  for (FormulaId id :
       {FormulaId::DA_SINH_2_6, FormulaId::DA_SIN_3_2_6, FormulaId::DA_SIN_3_6,
        FormulaId::DA_SIN_6_5_3, FormulaId::DA_SIN_3_2_2, FormulaId::DIXON_DOUBLE,
        FormulaId::CS_DOUBLE, FormulaId::DA_SINH_2_4, FormulaId::DA_SIN_2_4,
        FormulaId::DA_SIN_4_3_4}) {
    const FormulaEval e = double_angle(id, 0.0);
    CHECK(e.lhs == 0.0);
    CHECK(e.rhs == 0.0);
  }
  const FormulaEval c = double_angle(FormulaId::DA_COSH_2_6, 0.0);
  CHECK(c.lhs == 1.0);
  CHECK(c.rhs == 1.0);
}

TEST_CASE("double_angle arity and window errors") {
  CHECK_THROWS_AS(double_angle(FormulaId::MAF1_SIN, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(double_angle(FormulaId::DIXON_ADD_SIN, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(double_angle(FormulaId::CS_ADD, 0.1), std::invalid_argument);
  const double quarter = half_period(ParamPair(1.5, 6.0)).value() / 2.0;
  CHECK_THROWS_AS(double_angle(FormulaId::DA_SIN_3_2_6, quarter),
                  std::domain_error);
  CHECK_THROWS_AS(double_angle(FormulaId::DA_SIN_3_2_6, -0.1),
                  std::domain_error);
}

TEST_CASE("tau doubling matches the frozen value and the direct route") {
  const FormulaEval e = double_angle(FormulaId::TAU_DOUBLE, 0.5, 3.0);
  CHECK(e.lhs == doctest::Approx(0.89167448963014448).epsilon(1e-10));
  CHECK(e.rhs == doctest::Approx(0.89167448963014448).epsilon(1e-10));
  CHECK(e.residual <= 1e-9);
  // q = 2 classical: tau_{2,2} = tan
  const FormulaEval t = double_angle(FormulaId::TAU_DOUBLE, 0.3, 2.0);
  CHECK(t.rhs == doctest::Approx(std::tan(0.6)).epsilon(1e-10));
}

TEST_CASE("phi/psi endpoint values and round trip") {
  const PhiPsiResult at1 = phi_psi(1.0);
  CHECK(at1.phi == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(at1.phi_inv == doctest::Approx(1.0).epsilon(1e-14));
  const PhiPsiResult at0 = phi_psi(0.0);
  CHECK(at0.phi == 0.0);
  CHECK(at0.psi == 0.0);
  CHECK(at0.phi_inv == 0.0);
  CHECK(phi_psi(0.5).phi == doctest::Approx(0.67280089086970163).epsilon(1e-12));

  for (int i = 0; i <= 20; ++i) {
    const double x = i / 20.0;
    const double round = phi_psi(phi_psi(x).phi_inv).phi;
    CHECK(std::abs(round - x) <= 1e-10);
  }
  CHECK_THROWS_AS(phi_psi(-0.01), std::domain_error);
  CHECK_THROWS_AS(phi_psi(1.01), std::domain_error);
}

TEST_CASE("DA_SIN_3_2_2 quarter-point value and endpoint limit") {
  const ParamPair pq(1.5, 2.0);
  const double quarter = half_period(pq).value() / 2.0;
  const double expected =
      std::sqrt(135.0 + 78.0 * std::sqrt(3.0) -
                6.0 * std::sqrt(6.0 * (168.0 + 97.0 * std::sqrt(3.0))));
  CHECK(expected == doctest::Approx(0.834896).epsilon(2e-6));
  CHECK(sin_pq(pq, quarter).value == doctest::Approx(expected).epsilon(1e-10));

  // The closed form tends to sin_{3/2,2}(pi/2^-) = 1 at the window end.
  const double s = sin_pq(pq, quarter - 1e-7).value;
  const PhiPsiResult maps = phi_psi(s);
  const double lhs = phi_psi(phi_psi(maps.phi_inv).psi).phi;
  CHECK(std::abs(lhs - 1.0) <= 1e-6);
}

TEST_CASE("DA_SIN_3_2_6 and DA_SIN_3_6 endpoint behaviour") {
  // lhs -> 1 as x -> quarter period
  const ParamPair pq326(1.5, 6.0);
  const double q326 = half_period(pq326).value() / 2.0;
  const double s = sin_pq(pq326, q326 - 1e-7).value;
  const double s6 = std::pow(s, 6);
  const double lhs = 2.0 * s / std::cbrt(1.0 + 18.0 * s6 - 27.0 * s6 * s6);
  CHECK(std::abs(lhs - 1.0) <= 1e-5);

  // sin_{3,6}(pi_{3,6}/4) = (3 - 2 sqrt 2)^{1/3}
  const ParamPair pq36(3.0, 6.0);
  const double q36 = half_period(pq36).value() / 2.0;
  CHECK(sin_pq(pq36, q36).value ==
        doctest::Approx(std::cbrt(3.0 - 2.0 * std::sqrt(2.0))).epsilon(1e-10));
}

TEST_CASE("dixon_add reductions and dispatch") {
  const ParamPair pq(1.5, 3.0);
  // v = 0 reduces identically
  const DixonAddResult r0 = dixon_add(0.55, 0.0);
  const double s = sin_pq(pq, 0.55).value;
  CHECK(r0.sin_sum == doctest::Approx(s).epsilon(1e-11));
  CHECK(r0.cos_sum == doctest::Approx(cos_from_sin(pq, s)).epsilon(1e-10));

  // doubling dispatch at u == v
  const DixonAddResult dd = dixon_add(0.4, 0.4);
  CHECK(dd.sin_sum == doctest::Approx(0.73782782075382551).epsilon(1e-10));
  CHECK(dd.cos_sum == doctest::Approx(0.71006120311105618).epsilon(1e-10));

  // distinct arguments, same sum
  const DixonAddResult da = dixon_add(0.3, 0.5);
  CHECK(da.sin_sum == doctest::Approx(0.73782782075382551).epsilon(1e-10));
  CHECK(da.cos_sum == doctest::Approx(0.71006120311105618).epsilon(1e-10));

  // the cos^{1/2} addition form as printed passes (mixed u/v placement and
  // all; the suspicion of a typo does not survive numerics)
  CHECK(std::abs(da.cos_sum - cos_pq(pq, 0.8).value) <= 1e-9);

  CHECK(dixon_add(0.0, 0.0).sin_sum == 0.0);
  CHECK(dixon_add(0.0, 0.0).cos_sum == 1.0);
}

TEST_CASE("dixon_add near-degenerate and domain errors") {
  CHECK_THROWS_AS(dixon_add(0.4, 0.4 + 1e-15), formula_domain_error);
  const double half = half_period(ParamPair(1.5, 3.0)).value();
  CHECK_THROWS_AS(dixon_add(half * 0.7, half * 0.7), std::domain_error);
  CHECK_THROWS_AS(dixon_add(half * 0.6, half * 0.5), std::domain_error);
  CHECK_THROWS_AS(dixon_add(-0.1, 0.2), std::domain_error);
}

TEST_CASE("cox_shurman_add reductions, symmetry, doubling") {
  const ParamPair pq(2.0, 3.0);
  const double s5 = sin_pq(pq, 0.5).value;
  CHECK(cox_shurman_add(0.5, 0.0) == doctest::Approx(s5).epsilon(1e-11));

  // symmetric in (x, y)
  CHECK(std::abs(cox_shurman_add(0.5, 0.9) - cox_shurman_add(0.9, 0.5)) <=
        1e-11);

  // doubling dispatch: x = y = 0.6 equals sin_{2,3}(1.2)
  CHECK(cox_shurman_add(0.6, 0.6) ==
        doctest::Approx(0.96965193166523773).epsilon(1e-10));

  CHECK(cox_shurman_add(0.0, 0.0) == 0.0);
}

TEST_CASE("cox_shurman_add beyond the half period") {
  const ParamPair pq(2.0, 3.0);
  const double period = 2.0 * half_period(pq).value();
  // x + y = 2.3 lies past pi_{2,3}/2 = 1.402: the direct value comes from
  // the reflection sin(pi - x) = sin(x).
  const double expect = sin_pq(pq, period - 2.3).value;
  CHECK(std::abs(cox_shurman_add(1.6, 0.7) - expect) <= 1e-9);

  // doubling across the boundary: 2x = 2.4 > pi_{2,3}/2
  const double expect2 = sin_pq(pq, period - 2.4).value;
  CHECK(std::abs(cox_shurman_add(1.2, 1.2) - expect2) <= 1e-9);

  CHECK_THROWS_AS(cox_shurman_add(period * 0.6, period * 0.6),
                  std::domain_error);  // doubling needs x < pi/2
  CHECK_THROWS_AS(cox_shurman_add(period * 0.7, period * 0.5),
                  std::domain_error);  // x + y past the period
}

TEST_CASE("sweep_formula covers every id at modest n") {
  for (FormulaId id : all_formula_ids()) {
    const FormulaSweep s = sweep_formula(id, 16);
    CAPTURE(to_string(id));
    CHECK(s.points >= 12);
    CHECK(s.max_residual <= 1e-9);
  }
}
