#pragma once

#include "lambdan/polynomial.hpp"

namespace lambdan {

// The one-parameter objective behind the sharp constant lambda_n of
//
//   sum 1/x_i  >=  lambda / (1 + n^{n-2} (lambda - n^2) prod x_i),
//   x_i > 0, sum x_i = 1,
//
// reduces along x_1 = ... = x_{n-1} = t/n to n^2 / (1 - (n-1)/p_n(t)) with
//
//   p_n(t) = ((n-1) - (n-2) t) (1 + 2t + ... + (n-1) t^{n-2}).
//
// lambda_n is that expression at the unique maximizer t_n of p_n in (0,1).

/// Expanded p_n: coefficients [n-1, n, n+1, ..., 2n-3, -(n-1)(n-2)].
Polynomial build_pn(int n);

/// p_n' from its closed-form coefficients: k(n+k-1) on t^{k-1} for
/// k = 1..n-2, then -(n-2)(n-1)^2 on t^{n-2}.  Coefficient-wise identical
/// to derivative(build_pn(n)).
Polynomial build_pn_prime(int n);

/// p_n evaluated in factored form.  The inner sum has positive terms only
/// and the linear factor stays in [1, n-1] on [0,1], so the value is well
/// conditioned all the way up to t = 1 where p_n(1) = n(n-1)/2.
double eval_pn(int n, double t);

/// n^2 / (1 - (n-1)/p_n(t)); finite on (0,1], equal to n^3/(n-2) at t = 1.
double lambda_from_t(int n, double t);

/// Isolates t_n, the unique root of p_n' in (0,1).  First certifies
/// uniqueness by a Descartes sign-change count of exactly 1
/// (DescartesViolation otherwise), then bisects on [0,1].
RootBracket solve_tn(int n, double tol = 1e-14);

struct BestConstantResult {
  int n = 0;
  double t_n = 0.0;
  RootBracket t_bracket;
  double p_at_tn = 0.0;
  double lambda_n = 0.0;
  double lower_bound = 0.0;     // n^3/(n-1)
  double upper_bound = 0.0;     // n^3/(n-2)
  double improved_upper = 0.0;  // two-point refinement, see improved_upper()
  double tol = 0.0;
};

/// Solves for t_n and assembles lambda_n together with its bounds.
BestConstantResult compute_lambda(int n, double tol = 1e-14);

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// The double bound n^3/(n-1) <= lambda_n <= n^3/(n-2).
Bounds bounds_simple(int n);

/// Upper bound obtained from the test point x_1 = ... = x_{n-1} = 1/(n+1),
/// x_n = 2/(n+1):
///
///   (n+1)^2 (1/2 - n^n/(n+1)^n) / ((n+1)/(2n-1) - n^{n-2}/(n+1)^{n-2}).
///
/// Sharper than n^3/(n-2) for every n > 3; equals lambda_3 at n = 3.
double improved_upper(int n);

struct TnFloorCheck {
  double derivative_value = 0.0;  // p_n'(n/(n+1))
  double bracket_factor = 0.0;    // (1+1/n)^n - 8/3 + 1/n - 1/(3n^2)
  bool nonneg = false;            // derivative_value >= -1e-12
};

/// Checks t_n >= n/(n+1) through the factorization
/// p_n'(n/(n+1)) = 3n(n+1)^2 (n/(n+1))^n * bracket_factor.
/// The factor vanishes exactly at n = 3, where t_3 = 3/4 = n/(n+1).
TnFloorCheck tn_floor_check(int n);

/// Radical reference value of lambda_n for n in {3,4,5,6}:
///   lambda_3 = 25,
///   lambda_4 = (582 sqrt(97) - 2054)/121,
///   lambda_5 from t_5 = (theta + 7 + 241/theta)/48,
///             theta = cbrt(8119 + 48 sqrt(22535)),
///   lambda_6 from the nested-radical quartic root t_6.
/// For n = 5 the independent two-term radical expression for lambda_5 is
/// also evaluated and cross-checked.  Throws Unsupported for other n.
double closed_form_reference(int n);

}  // namespace lambdan
