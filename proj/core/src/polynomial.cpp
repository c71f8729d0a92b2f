#include "lambdan/polynomial.hpp"

#include <cmath>
#include <utility>

namespace lambdan {
namespace {

// Drop trailing coefficients that are exactly 0; no epsilon trimming, the
// Descartes count must see structural signs only.
std::vector<double> normalized(std::vector<double> c) {
  if (c.empty()) c.push_back(0.0);
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  return c;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : coeffs_(normalized(std::vector<double>(coeffs))) {}

Polynomial::Polynomial(std::vector<double> coeffs)
    : coeffs_(normalized(std::move(coeffs))) {}

double eval_horner(const Polynomial& p, double t) {
  const auto& c = p.coeffs();
  double acc = c.back();
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coeffs();
  if (c.size() == 1) return Polynomial{};
  std::vector<double> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) {
    d[k - 1] = static_cast<double>(k) * c[k];
  }
  return Polynomial(std::move(d));
}

int sign_changes(const Polynomial& p) {
  int changes = 0;
  int prev = 0;
  for (double c : p.coeffs()) {
    const int s = sign_of(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

RootBracket bisect_unique_root(const Polynomial& p, double lo, double hi,
                               double tol) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi) || !(tol > 0.0)) {
    throw OutOfRange("bisect_unique_root: need finite lo < hi and tol > 0");
  }
  const double flo = eval_horner(p, lo);
  const double fhi = eval_horner(p, hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi)) {
    throw NonFinite("bisect_unique_root: endpoint evaluation is not finite");
  }
  const int slo = sign_of(flo);
  const int shi = sign_of(fhi);
  if (slo * shi >= 0) {
    throw NoSignChange("bisect_unique_root: endpoint signs do not differ");
  }

  RootBracket out;
  int iterations = 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating resolution
    const double fmid = eval_horner(p, mid);
    if (!std::isfinite(fmid)) {
      throw NonFinite("bisect_unique_root: midpoint evaluation is not finite");
    }
    ++iterations;
    const int smid = sign_of(fmid);
    if (smid == 0) {
      // Exact hit: collapse the bracket onto the root.
      out.lo = out.hi = out.root_estimate = mid;
      out.width = 0.0;
      out.iterations = iterations;
      out.sign_lo = out.sign_hi = 0;
      return out;
    }
    if (smid == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.lo = lo;
  out.hi = hi;
  out.root_estimate = 0.5 * (lo + hi);
  out.width = hi - lo;
  out.iterations = iterations;
  out.sign_lo = slo;
  out.sign_hi = shi;
  return out;
}

}  // namespace lambdan
