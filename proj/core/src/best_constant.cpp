#include "lambdan/best_constant.hpp"

#include <cmath>
#include <vector>

namespace lambdan {
namespace {

void require_order(int n, const char* who) {
  if (n < 3) throw BadOrder(std::string(who) + ": n must be >= 3");
}

}  // namespace

Polynomial build_pn(int n) {
  require_order(n, "build_pn");
  std::vector<double> c(static_cast<std::size_t>(n));
  c[0] = n - 1;
  for (int k = 1; k <= n - 2; ++k) c[static_cast<std::size_t>(k)] = n + k - 1;
  c[static_cast<std::size_t>(n - 1)] = -static_cast<double>(n - 1) * (n - 2);
  return Polynomial(std::move(c));
}

Polynomial build_pn_prime(int n) {
  require_order(n, "build_pn_prime");
  std::vector<double> c(static_cast<std::size_t>(n - 1));
  for (int k = 1; k <= n - 2; ++k) {
    c[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * (n + k - 1);
  }
  c[static_cast<std::size_t>(n - 2)] =
      -static_cast<double>(n - 2) * (n - 1) * (n - 1);
  return Polynomial(std::move(c));
}

double eval_pn(int n, double t) {
  require_order(n, "eval_pn");
  // Horner on 1 + 2t + ... + (n-1) t^{n-2}, all terms positive.
  double inner = n - 1;
  for (int k = n - 2; k >= 1; --k) inner = inner * t + k;
  return ((n - 1) - (n - 2) * t) * inner;
}

double lambda_from_t(int n, double t) {
  const double p = eval_pn(n, t);
  return static_cast<double>(n) * n / (1.0 - (n - 1) / p);
}

RootBracket solve_tn(int n, double tol) {
  require_order(n, "solve_tn");
  if (!(tol > 0.0)) throw OutOfRange("solve_tn: tol must be > 0");
  const Polynomial prime = build_pn_prime(n);
  if (sign_changes(prime) != 1) {
    throw DescartesViolation("solve_tn: p_n' must have exactly one coefficient sign change");
  }
  return bisect_unique_root(prime, 0.0, 1.0, tol);
}

BestConstantResult compute_lambda(int n, double tol) {
  BestConstantResult r;
  r.n = n;
  r.tol = tol;
  r.t_bracket = solve_tn(n, tol);
  r.t_n = r.t_bracket.root_estimate;
  r.p_at_tn = eval_pn(n, r.t_n);
  r.lambda_n = static_cast<double>(n) * n / (1.0 - (n - 1) / r.p_at_tn);
  const Bounds b = bounds_simple(n);
  r.lower_bound = b.lower;
  r.upper_bound = b.upper;
  r.improved_upper = improved_upper(n);
  return r;
}

Bounds bounds_simple(int n) {
  require_order(n, "bounds_simple");
  const double n3 = static_cast<double>(n) * n * n;
  return {n3 / (n - 1), n3 / (n - 2)};
}

double improved_upper(int n) {
  require_order(n, "improved_upper");
  const double r = static_cast<double>(n) / (n + 1);
  const double num = 0.5 - std::pow(r, n);
  const double den = static_cast<double>(n + 1) / (2 * n - 1) - std::pow(r, n - 2);
  return static_cast<double>(n + 1) * (n + 1) * num / den;
}

TnFloorCheck tn_floor_check(int n) {
  require_order(n, "tn_floor_check");
  TnFloorCheck out;
  out.derivative_value =
      eval_horner(build_pn_prime(n), static_cast<double>(n) / (n + 1));
  out.bracket_factor = std::pow(1.0 + 1.0 / n, n) - 8.0 / 3.0 + 1.0 / n -
                       1.0 / (3.0 * n * n);
  out.nonneg = out.derivative_value >= -1e-12;
  return out;
}

double closed_form_reference(int n) {
  switch (n) {
    case 3:
      return 25.0;
    case 4: {
      return (582.0 * std::sqrt(97.0) - 2054.0) / 121.0;
    }
    case 5: {
      const double root = std::sqrt(22535.0);
      const double theta = std::cbrt(8119.0 + 48.0 * root);
      const double t5 = (theta + 7.0 + 241.0 / theta) / 48.0;
      const double lam = lambda_from_t(5, t5);
      // Independent two-term radical expression for lambda_5.
      const double alt = (12933567.0 - 93093.0 * root) / 4135801.0 * theta +
                         (17887113.0 + 560211.0 * root) / 996728041.0 * theta * theta -
                         288017.0 / 17161.0;
      if (std::abs(lam - alt) > 1e-9 * lam) {
        throw Error("closed_form_reference: the two lambda_5 expressions disagree");
      }
      return lam;
    }
    case 6: {
      const double psi = std::cbrt(1473.0 + std::sqrt(13712905.0));
      const double phi = std::sqrt(-50.0 * psi + 481.0 + 11300.0 / psi);
      const double t6 =
          (9.0 + phi + std::sqrt(50.0 * psi + 962.0 - 11300.0 / psi + 47258.0 / phi)) /
          100.0;
      return lambda_from_t(6, t6);
    }
    default:
      throw Unsupported("closed_form_reference: radical forms exist for n in {3,4,5,6} only");
  }
}

}  // namespace lambdan
