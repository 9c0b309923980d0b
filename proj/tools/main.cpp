#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gentrig/duality.hpp"
#include "gentrig/errors.hpp"
#include "gentrig/formulas.hpp"
#include "gentrig/gtf.hpp"
#include "gentrig/params.hpp"
#include "gentrig/verify.hpp"

namespace {

// Locale-independent formatting, 15 significant digits.
std::string num15(double v) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v,
                                 std::chars_format::general, 15);
  return std::string(buf, end);
}

std::string num3(double v) {
  char buf[40];
  auto [end, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 3);
  return std::string(buf, end);
}

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

int run_eval(const std::string& fn, double p, double q, double x) {
  const gentrig::ParamPair pq(p, q);
  double value;
  double residual;
  if (fn == "sin") {
    const auto r = gentrig::sin_pq(pq, x);
    value = r.value;
    residual = r.residual;
  } else if (fn == "cos") {
    const auto r = gentrig::cos_pq(pq, x);
    value = r.value;
    residual = r.residual;
  } else if (fn == "sinh") {
    const auto r = gentrig::sinh_pq(pq, x);
    value = r.value;
    residual = r.residual;
  } else if (fn == "cosh") {
    const auto r = gentrig::cosh_pq(pq, x);
    value = r.value;
    residual = r.residual;
  } else if (fn == "tan") {
    value = gentrig::tan_pq(pq, x);
    residual = gentrig::sin_pq(pq, x).residual;
  } else if (fn == "tau") {
    value = gentrig::tau_pq(pq, x);
    residual = gentrig::sin_pq(pq, x).residual;
  } else {
    std::cerr << "error: unknown function '" << fn
              << "' (expected sin|cos|sinh|cosh|tan|tau)\n";
    return kExitUsage;
  }
  std::cout << num15(value) << "\n";
  std::cout << "residual = " << num3(residual) << "\n";
  return kExitOk;
}

int run_table(const std::string& fn, double p, double q, double x_min,
              double x_max, int n) {
  const gentrig::ParamPair pq(p, q);
  if (!(n >= 2)) {
    std::cerr << "error: table needs --n >= 2\n";
    return kExitUsage;
  }
  if (!(x_min >= 0.0) || !(x_min < x_max)) {
    std::cerr << "error: table needs 0 <= x-min < x-max\n";
    return kExitUsage;
  }
  const bool hyperbolic = (fn == "sinh" || fn == "cosh");
  const gentrig::ExtReal sup =
      hyperbolic ? gentrig::half_period(gentrig::dual(pq))
                 : gentrig::half_period(pq);
  if (sup.is_finite() && x_max > sup.value() - 1e-12) {
    std::cerr << "error: x-max = " << num15(x_max)
              << " is not below the domain end " << num15(sup.value()) << "\n";
    return kExitUsage;
  }

  // Evaluate everything before emitting the first row: a domain failure
  // must not leave a partial table behind.
  std::vector<double> xs(n), values(n);
  for (int i = 0; i < n; ++i)
    xs[i] = x_min + (x_max - x_min) * i / static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) {
    const double x = xs[i];
    if (fn == "sin")
      values[i] = gentrig::sin_pq(pq, x).value;
    else if (fn == "cos")
      values[i] = gentrig::cos_pq(pq, x).value;
    else if (fn == "sinh")
      values[i] = gentrig::sinh_pq(pq, x).value;
    else if (fn == "cosh")
      values[i] = gentrig::cosh_pq(pq, x).value;
    else if (fn == "tan")
      values[i] = gentrig::tan_pq(pq, x);
    else if (fn == "tau")
      values[i] = gentrig::tau_pq(pq, x);
    else {
      std::cerr << "error: unknown function '" << fn << "'\n";
      return kExitUsage;
    }
  }
  std::cout << "x,value\n";
  for (int i = 0; i < n; ++i)
    std::cout << num15(xs[i]) << "," << num15(values[i]) << "\n";
  return kExitOk;
}

int run_const(double p, double q) {
  const gentrig::ParamPair pq(p, q);
  const gentrig::ExtReal h = gentrig::half_period(pq);
  if (h.is_finite())
    std::cout << "pi = " << num15(2.0 * h.value()) << "\n";
  else
    std::cout << "pi = inf\n";
  if (p > 1.0)
    std::cout << "p_star = " << num15(gentrig::conjugate(p)) << "\n";
  else
    std::cout << "p_star = undefined\n";
  std::cout << "r = " << num15(gentrig::r_map(pq)) << "\n";
  return kExitOk;
}

int run_verify(double tolerance, const std::string& filter,
               const std::string& out_path) {
  const std::vector<gentrig::CheckReport> reports =
      gentrig::run_suite(tolerance, filter);
  if (reports.empty()) {
    std::cerr << "error: no checks match filter '" << filter << "'\n";
    return kExitUsage;
  }
  int passed = 0;
  for (const auto& r : reports) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name
              << "  max_residual=" << num3(r.max_residual)
              << " tolerance=" << num3(r.tolerance) << "  (" << r.grid_spec
              << ")\n";
    if (r.passed) ++passed;
  }
  std::cout << passed << "/" << reports.size() << " checks passed\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    for (const auto& r : reports) out << r.to_line() << "\n";
  }
  return passed == static_cast<int>(reports.size()) ? kExitOk
                                                    : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gentrig: generalized trigonometric and hyperbolic functions with "
      "parameter pair (p, q)"};
  app.require_subcommand(1);

  std::string fn;
  double p = 0, q = 0, x = 0, x_min = 0, x_max = 0;
  int n = 0;
  double tolerance = 1e-9;
  std::string filter, out_path;

  auto* eval = app.add_subcommand("eval", "evaluate one function value");
  eval->add_option("fn", fn, "sin|cos|sinh|cosh|tan|tau")->required();
  eval->add_option("--p", p, "exponent p")->required();
  eval->add_option("--q", q, "exponent q")->required();
  eval->add_option("--x", x, "argument")->required();

  auto* table = app.add_subcommand("table", "emit a CSV table of values");
  table->add_option("fn", fn, "sin|cos|sinh|cosh|tan|tau")->required();
  table->add_option("--p", p, "exponent p")->required();
  table->add_option("--q", q, "exponent q")->required();
  table->add_option("--x-min", x_min, "first abscissa")->required();
  table->add_option("--x-max", x_max, "last abscissa")->required();
  table->add_option("--n", n, "number of rows (>= 2)")->required();

  auto* cnst = app.add_subcommand("const", "print pi_{p,q}, p*, r(p)");
  cnst->add_option("--p", p, "exponent p")->required();
  cnst->add_option("--q", q, "exponent q")->required();

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--tolerance", tolerance, "residual tolerance")
      ->default_val(1e-9);
  verify->add_option("--filter", filter, "restrict checks by name prefix");
  verify->add_option("--out", out_path, "write structured report lines here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message / help
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return run_eval(fn, p, q, x);
    if (table->parsed()) return run_table(fn, p, q, x_min, x_max, n);
    if (cnst->parsed()) return run_const(p, q);
    if (verify->parsed()) {
      if (!(tolerance > 0.0)) {
        std::cerr << "error: --tolerance must be positive\n";
        return kExitUsage;
      }
      return run_verify(tolerance, filter, out_path);
    }
  } catch (const gentrig::convergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
