#pragma once

#include <initializer_list>
#include <vector>

#include "lambdan/errors.hpp"

namespace lambdan {

/// Dense univariate real polynomial, coefficients ascending by degree
/// (coeffs()[k] multiplies t^k).  Trailing zero coefficients are stripped
/// on construction; the zero polynomial keeps a single 0.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  Polynomial(std::initializer_list<double> coeffs);
  explicit Polynomial(std::vector<double> coeffs);

  const std::vector<double>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<double> coeffs_;
};

/// Evaluates p at t by nested multiplication.
double eval_horner(const Polynomial& p, double t);

/// Formal derivative, normalized; the derivative of a constant is {0}.
Polynomial derivative(const Polynomial& p);

/// Number of sign changes in the coefficient sequence, zeros skipped.
/// By Descartes' rule of signs this bounds the number of positive roots.
int sign_changes(const Polynomial& p);

/// Certificate produced by bisect_unique_root.  Normally lo < hi, the
/// endpoint signs differ and the root estimate is the final midpoint.
/// When an evaluation hits 0 exactly the bracket collapses to width 0 at
/// that point and both stored signs are 0.
struct RootBracket {
  double lo = 0.0;
  double hi = 0.0;
  double root_estimate = 0.0;
  double width = 0.0;
  int iterations = 0;
  int sign_lo = 0;
  int sign_hi = 0;
};

/// Isolates a sign change of p on [lo, hi] down to width <= tol by pure
/// bisection; no derivative steps, so the result is deterministic.
/// Throws NoSignChange unless the endpoint signs are strictly opposite,
/// NonFinite if an evaluation is not finite.
RootBracket bisect_unique_root(const Polynomial& p, double lo, double hi,
                               double tol);

}  // namespace lambdan
