#include "lambdan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "lambdan/best_constant.hpp"

namespace lambdan {
namespace {

constexpr int kReducedScanPoints = 1000;
constexpr int kFamilyLogScanPoints = 160;   // x from 1e-8 to 1e-1
constexpr int kFamilyGridScanPoints = 200;  // x uniform on (0, 1/n]
constexpr double kDegenerateRatio = 1e-6;   // min(x)/max(x) guard for triangles

// Running minimum with its witness.
struct MarginTracker {
  double min_margin = std::numeric_limits<double>::infinity();
  std::string kind;
  std::vector<double> witness;

  void update(double margin, const char* witness_kind,
              std::vector<double> candidate) {
    if (margin < min_margin) {
      min_margin = margin;
      kind = witness_kind;
      witness = std::move(candidate);
    }
  }
};

void finalize(VerificationReport& rep, const MarginTracker& tracker) {
  rep.min_margin = tracker.min_margin;
  rep.witness_kind = tracker.kind;
  rep.witness = tracker.witness;
  rep.verdict = (tracker.min_margin < -rep.margin_tol && !tracker.witness.empty())
                    ? Verdict::VIOLATED
                    : Verdict::HOLDS;
}

long double recip_sum(std::span<const double> xs) {
  long double s = 0.0L;
  for (double x : xs) s += 1.0L / static_cast<long double>(x);
  return s;
}

long double f_rhs_ld(int n, double lambda, std::span<const double> xs) {
  const long double scaled =
      detail::scaled_product(xs) / (static_cast<long double>(n) * n);
  const long double den =
      1.0L + scaled * (static_cast<long double>(lambda) -
                       static_cast<long double>(n) * n);
  if (!(den > 0.0L)) {
    throw NonPositiveDenominator("f_rhs: denominator must stay positive for lambda > 0");
  }
  return static_cast<long double>(lambda) / den;
}

double ineq1_margin_on(int n, double lambda, std::span<const double> xs) {
  const long double f = f_rhs_ld(n, lambda, xs);
  return static_cast<double>((recip_sum(xs) - f) / std::max(1.0L, f));
}

long double ipow_ld(long double base, int e) {
  long double acc = 1.0L;
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

std::vector<double> one_small_family(int n, double x) {
  std::vector<double> xs(static_cast<std::size_t>(n),
                         (1.0 - x) / static_cast<double>(n - 1));
  xs.front() = x;
  return xs;
}

double ineq4_margin_on(int n, double nu, std::span<const double> xs) {
  const long double prod = detail::scaled_product(xs);  // n^n prod x
  const long double rhs =
      static_cast<long double>(nu) +
      (static_cast<long double>(n) * n - static_cast<long double>(nu)) / prod;
  return static_cast<double>((rhs - recip_sum(xs)) / std::max(1.0L, std::abs(rhs)));
}

double ineq5_margin_on(int n, std::span<const double> xs) {
  const long double rhs =
      static_cast<long double>(n) * n / detail::scaled_product(xs);
  return static_cast<double>((rhs - recip_sum(xs)) / std::max(1.0L, rhs));
}

struct LogMeans {
  long double log_a;
  long double log_h;
  long double log_g;
};

LogMeans log_means(std::span<const double> xs) {
  const auto n = static_cast<long double>(xs.size());
  long double sum = 0.0L, recip = 0.0L, logsum = 0.0L;
  for (double x : xs) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw NotPositive("means: inputs must be positive and finite");
    }
    sum += x;
    recip += 1.0L / static_cast<long double>(x);
    logsum += std::log(static_cast<long double>(x));
  }
  return {std::log(sum / n), std::log(n / recip), logsum / n};
}

double ahg_log_margin(double l, std::span<const double> xs) {
  const LogMeans m = log_means(xs);
  return static_cast<double>(static_cast<long double>(l) * m.log_a + m.log_h -
                             (static_cast<long double>(l) + 1.0L) * m.log_g);
}

struct SosPairLd {
  long double lhs;
  long double rhs;
};

SosPairLd sos3_pair(double x1, double x2, double x3) {
  const long double a = x1, b = x2, c = x3;
  const long double s1 = a + b + c;
  const long double s2 = a * b + b * c + c * a;
  const long double s3 = a * b * c;
  const long double lhs = s1 * s1 * s1 * s2 + 48.0L * s2 * s3 - 25.0L * s1 * s1 * s3;
  auto term = [](long double u, long double v, long double w) {
    const long double d = v - w;
    const long double e = 3.0L * u - v - w;
    return u * d * d * e * e;
  };
  const long double rhs = term(a, b, c) + term(b, a, c) + term(c, b, a);
  return {lhs, rhs};
}

SosPairLd sos_quintic_pair(double v, double x1, double x2, double x3) {
  const long double a = static_cast<long double>(x2) + x3;
  const long double b = static_cast<long double>(x1) + x3;
  const long double c = static_cast<long double>(x1) + x2;
  auto p2 = [](long double u) { return u * u; };
  auto p3 = [](long double u) { return u * u * u; };
  auto p4 = [&](long double u) { return p2(u) * p2(u); };
  auto p5 = [&](long double u) { return p4(u) * u; };
  const long double sym3_a5 = p5(a) + p5(b) + p5(c);
  const long double sym6_a4b = p4(a) * (b + c) + p4(b) * (a + c) + p4(c) * (a + b);
  const long double sym6_a3b2 = p3(a) * (p2(b) + p2(c)) + p3(b) * (p2(a) + p2(c)) +
                                p3(c) * (p2(a) + p2(b));
  const long double abc = a * b * c;
  const long double sym3_a3bc = abc * (p2(a) + p2(b) + p2(c));
  const long double sym3_ab2c2 = abc * (a * b + b * c + c * a);
  const long double vl = v;
  const long double lhs = vl * vl * sym3_a5 - vl * (vl + 2.0L) * sym6_a4b +
                          2.0L * vl * sym6_a3b2 +
                          p2(vl + 2.0L) * sym3_a3bc -
                          4.0L * (vl + 1.0L) * sym3_ab2c2;
  auto term = [&](long double u, long double s, long double t) {
    const long double d = s - t;
    const long double e = vl * u - s - t;
    return 4.0L * u * d * d * e * e;
  };
  const long double rhs = term(x1, x2, x3) + term(x2, x1, x3) + term(x3, x2, x1);
  return {lhs, rhs};
}

double sos_rel_deviation(const SosPairLd& p) {
  return static_cast<double>(std::abs(p.lhs - p.rhs) /
                             std::max(1.0L, std::abs(p.lhs)));
}

// Shared scaffolding for the triangle campaigns: deterministic probes
// first, then Ravi-sampled triangles with the degeneracy guard.
template <typename MarginFn>
VerificationReport triangle_campaign(const char* id, double parameter,
                                     std::span<const Triangle> probes,
                                     long samples, std::uint64_t seed,
                                     MarginFn&& margin_of) {
  VerificationReport rep;
  rep.inequality_id = id;
  rep.n = 3;
  rep.parameter = parameter;
  MarginTracker tracker;
  for (const Triangle& t : probes) {
    tracker.update(margin_of(t), "triangle", {t.a, t.b, t.c});
    ++rep.samples_tested;
  }
  for (long i = 0; i < samples; ++i) {
    const SimplexPoint x = sample_point(3, seed, static_cast<std::uint64_t>(i));
    const auto [mn, mx] =
        std::minmax_element(x.coords.begin(), x.coords.end());
    if (*mn / *mx < kDegenerateRatio) {
      ++rep.samples_rejected;
      continue;
    }
    const Triangle t = ravi_triangle(x);
    tracker.update(margin_of(t), "triangle", {t.a, t.b, t.c});
    ++rep.samples_tested;
  }
  finalize(rep, tracker);
  return rep;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::HOLDS:
      return "HOLDS";
    case Verdict::VIOLATED:
      return "VIOLATED";
    default:
      return "INCONCLUSIVE";
  }
}

double f_rhs(int n, double lambda, const SimplexPoint& p) {
  if (p.n() != n || n < 2) throw BadOrder("f_rhs: point order mismatch");
  if (!(lambda > 0.0)) throw NotPositive("f_rhs: lambda must be > 0");
  return static_cast<double>(f_rhs_ld(n, lambda, p.coords));
}

double ineq1_margin(int n, double lambda, const SimplexPoint& p) {
  if (p.n() != n || n < 2) throw BadOrder("ineq1_margin: point order mismatch");
  if (!(lambda > 0.0)) throw NotPositive("ineq1_margin: lambda must be > 0");
  return ineq1_margin_on(n, lambda, p.coords);
}

double ineq4_margin(int n, double nu, const SimplexPoint& p) {
  if (p.n() != n || n < 2) throw BadOrder("ineq4_margin: point order mismatch");
  return ineq4_margin_on(n, nu, p.coords);
}

double ineq5_margin(int n, const SimplexPoint& p) {
  if (p.n() != n || n < 2) throw BadOrder("ineq5_margin: point order mismatch");
  return ineq5_margin_on(n, p.coords);
}

double ahg_margin(double l, const SimplexPoint& p) {
  return ahg_log_margin(l, p.coords);
}

VerificationReport check_ineq1(int n, double lambda,
                               std::span<const SimplexPoint> points,
                               bool include_reduced_scan) {
  if (n < 2) throw BadOrder("check_ineq1: n must be >= 2");
  if (!(lambda > 0.0)) throw NotPositive("check_ineq1: lambda must be > 0");
  if (include_reduced_scan && n < 3) {
    throw BadOrder("check_ineq1: the reduced scan needs n >= 3");
  }
  VerificationReport rep;
  rep.inequality_id = "ineq1";
  rep.n = n;
  rep.parameter = lambda;
  MarginTracker tracker;
  for (const SimplexPoint& p : points) {
    if (p.n() != n) throw BadOrder("check_ineq1: point order mismatch");
    tracker.update(ineq1_margin_on(n, lambda, p.coords), "simplex", p.coords);
    ++rep.samples_tested;
  }
  if (include_reduced_scan) {
    // The global minimum of g lies in this family, so a dense scan of t
    // catches any violation the random samples miss.
    for (int i = 1; i <= kReducedScanPoints; ++i) {
      const double t = static_cast<double>(i) / kReducedScanPoints;
      const double margin =
          (eval_g_reduced(n, t) - lambda) / std::max(1.0, lambda);
      tracker.update(margin, "simplex", reduced_family_point(n, t).coords);
      ++rep.samples_tested;
    }
  }
  finalize(rep, tracker);
  return rep;
}

double sym_poly_residual(int n, double lambda, std::span<const double> xs) {
  if (n < 2 || static_cast<int>(xs.size()) != n) {
    throw BadOrder("sym_poly_residual: need n >= 2 values");
  }
  long double s1 = 0.0L, recip = 0.0L, sn = 1.0L;
  for (double x : xs) {
    if (!(x > 0.0)) throw NotPositive("sym_poly_residual: inputs must be > 0");
    s1 += x;
    recip += 1.0L / static_cast<long double>(x);
    sn *= x;
  }
  const long double snm1 = sn * recip;  // s_{n-1} = s_n * sum(1/x_i)
  const long double s1nm1 = ipow_ld(s1, n - 1);
  const long double nn2 = ipow_ld(static_cast<long double>(n), n - 2);
  const long double lam = lambda;
  return static_cast<double>(
      s1nm1 * s1 * snm1 +
      nn2 * (lam - static_cast<long double>(n) * n) * snm1 * sn -
      lam * s1nm1 * sn);
}

OracleResult brute_force_min_g(int n, int m) {
  if (n < 3 || n > 5) {
    throw BadOrder("brute_force_min_g: supported for n in {3,4,5}");
  }
  if (m < 4 * n) {
    throw ResolutionTooSmall("brute_force_min_g: need m >= 4n");
  }
  OracleResult out;
  out.n = n;
  out.grid_resolution = m;
  out.min_value = std::numeric_limits<double>::infinity();
  std::vector<double> best;
  for_each_grid_point(n, m, [&](std::span<const double> x) {
    if (detail::near_centroid(x)) return;  // the excluded point
    const double g = detail::eval_g_on(x);
    ++out.points_evaluated;
    if (g < out.min_value) {
      out.min_value = g;
      best.assign(x.begin(), x.end());
    }
  });
  if (out.points_evaluated == 0) {
    throw NoSamples("brute_force_min_g: every grid point was excluded");
  }
  out.argmin = SimplexPoint{std::move(best)};
  std::vector<double> sorted = out.argmin.coords;
  std::sort(sorted.begin(), sorted.end());
  out.near_reduced_family =
      sorted[static_cast<std::size_t>(n - 2)] - sorted.front() <=
      1.0 / m + 1e-12;
  return out;
}

double nu_best(int n) {
  if (n < 2) throw BadOrder("nu_best: n must be >= 2");
  // n^n/(n-1)^{n-1} written as n * (n/(n-1))^{n-1} to survive large n.
  return static_cast<double>(n) * n -
         n * std::pow(static_cast<double>(n) / (n - 1), n - 1);
}

VerificationReport check_ineq4(int n, double nu,
                               std::span<const SimplexPoint> points) {
  if (n < 2) throw BadOrder("check_ineq4: n must be >= 2");
  VerificationReport rep;
  rep.inequality_id = "ineq4";
  rep.n = n;
  rep.parameter = nu;
  MarginTracker tracker;
  for (const SimplexPoint& p : points) {
    if (p.n() != n) throw BadOrder("check_ineq4: point order mismatch");
    tracker.update(ineq4_margin_on(n, nu, p.coords), "simplex", p.coords);
    ++rep.samples_tested;
  }
  // The maximizer of the left-over has one small coordinate and n-1 equal
  // large ones; scan that family both log-spaced toward the boundary and
  // uniformly up to the centroid.
  auto scan = [&](double x) {
    std::vector<double> xs = one_small_family(n, x);
    tracker.update(ineq4_margin_on(n, nu, xs), "simplex", xs);
    ++rep.samples_tested;
  };
  for (int i = 0; i < kFamilyLogScanPoints; ++i) {
    const double expo =
        1.0 + 7.0 * i / static_cast<double>(kFamilyLogScanPoints - 1);
    scan(std::pow(10.0, -expo));
  }
  for (int j = 1; j <= kFamilyGridScanPoints; ++j) {
    scan(static_cast<double>(j) / (kFamilyGridScanPoints * n));
  }
  finalize(rep, tracker);
  return rep;
}

VerificationReport check_ineq5(int n, std::span<const SimplexPoint> points) {
  if (n < 2) throw BadOrder("check_ineq5: n must be >= 2");
  VerificationReport rep;
  rep.inequality_id = "ineq5";
  rep.n = n;
  MarginTracker tracker;
  for (const SimplexPoint& p : points) {
    if (p.n() != n) throw BadOrder("check_ineq5: point order mismatch");
    tracker.update(ineq5_margin_on(n, p.coords), "simplex", p.coords);
    ++rep.samples_tested;
  }
  finalize(rep, tracker);
  return rep;
}

double appendix_reduced_residual(int n, double x) {
  if (n < 3) throw BadOrder("appendix_reduced_residual: n must be >= 3");
  if (!(x > 0.0) || !(x <= 1.0 / n)) {
    throw OutOfRange("appendix_reduced_residual: x must lie in (0, 1/n]");
  }
  const long double u = static_cast<long double>(n) * x;
  long double acc = n - 2;  // Horner over coefficients 1..n-2, ascending
  for (int j = n - 4; j >= 0; --j) acc = acc * u + (j + 1);
  const long double d = u - 1.0L;
  const long double residual = d * d * acc;

  // Sign cross-check against the unreduced two-sided form at
  // (x, (1-x)/(n-1), ...): log(rhs) - log(lhs) must be nonnegative and
  // vanish exactly where the residual does.
  const long double log_rhs =
      (n - 1) * std::log(static_cast<long double>(n - 1)) -
      (n - 2) * std::log(static_cast<long double>(n)) -
      std::log(static_cast<long double>(x)) -
      (n - 1) * std::log1p(-static_cast<long double>(x));
  const long double lhs = 1.0L / static_cast<long double>(x) +
                          static_cast<long double>(n - 1) * (n - 1) /
                              (1.0L - static_cast<long double>(x));
  const long double log_diff = log_rhs - std::log(lhs);
  if (log_diff < -1e-9L) {
    throw Error("appendix_reduced_residual: sign disagreement with the unreduced form");
  }
  return static_cast<double>(residual);
}

Means means(std::span<const double> xs) {
  if (xs.empty()) throw BadOrder("means: need at least one value");
  const auto n = static_cast<long double>(xs.size());
  long double sum = 0.0L, recip = 0.0L, logsum = 0.0L;
  for (double x : xs) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw NotPositive("means: inputs must be positive and finite");
    }
    sum += x;
    recip += 1.0L / static_cast<long double>(x);
    logsum += std::log(static_cast<long double>(x));
  }
  Means m;
  m.arithmetic = static_cast<double>(sum / n);
  m.harmonic = static_cast<double>(n / recip);
  m.geometric = static_cast<double>(std::exp(logsum / n));
  const double slack = 1e-12 * std::max(1.0, m.arithmetic);
  if (!(m.arithmetic + slack >= m.geometric && m.geometric + slack >= m.harmonic)) {
    throw Error("means: A >= G >= H failed beyond rounding");
  }
  return m;
}

VerificationReport check_ahg(int n, double l,
                             std::span<const SimplexPoint> points) {
  if (n < 2) throw BadOrder("check_ahg: n must be >= 2");
  VerificationReport rep;
  rep.inequality_id = "ahg";
  rep.n = n;
  rep.parameter = l;
  MarginTracker tracker;
  for (const SimplexPoint& p : points) {
    if (p.n() != n) throw BadOrder("check_ahg: point order mismatch");
    tracker.update(ahg_log_margin(l, p.coords), "simplex", p.coords);
    ++rep.samples_tested;
  }
  const bool expect_false = l < static_cast<double>(n - 1);
  if (expect_false) {
    // The counterexample family: n-1 ones and one coordinate sent to 0.
    for (int k = 1; k <= 12; ++k) {
      std::vector<double> xs(static_cast<std::size_t>(n), 1.0);
      xs.back() = std::pow(10.0, -k);
      const double margin = ahg_log_margin(l, xs);
      const double total = static_cast<double>(n - 1) + xs.back();
      for (double& c : xs) c /= total;
      tracker.update(margin, "simplex", std::move(xs));
      ++rep.samples_tested;
    }
  }
  finalize(rep, tracker);
  if (expect_false && rep.verdict == Verdict::HOLDS) {
    // The inequality is known to fail for l < n-1, but the failure may lie
    // beyond representable floating-point inputs.
    rep.verdict = Verdict::INCONCLUSIVE;
  }
  return rep;
}

double check_lower_bound_form(int n, double s) {
  if (n < 2) throw BadOrder("check_lower_bound_form: n must be >= 2");
  if (!(s > 0.0) || !(s < 1.0)) {
    throw OutOfRange("check_lower_bound_form: s must lie in (0, 1)");
  }
  // (1-s^n)/(1-s^{n-1}) as a ratio of geometric sums.
  long double num = 0.0L, den = 0.0L, pk = 1.0L;
  for (int k = 0; k < n; ++k) {
    num += pk;
    if (k < n - 1) den += pk;
    pk *= s;
  }
  const long double nl = n;
  return static_cast<double>(nl * nl * num / (s * den) - nl * nl * nl / (nl - 1.0L));
}

VerificationReport check_lower_bound_scan(int n, long samples) {
  if (samples < 1) throw OutOfRange("check_lower_bound_scan: samples must be >= 1");
  VerificationReport rep;
  rep.inequality_id = "lowerform";
  rep.n = n;
  MarginTracker tracker;
  const double scale = std::max(
      1.0, static_cast<double>(n) * n * n / (n - 1));
  for (long j = 1; j <= samples; ++j) {
    const double s = static_cast<double>(j) / static_cast<double>(samples + 1);
    tracker.update(check_lower_bound_form(n, s) / scale, "scalar", {s});
    ++rep.samples_tested;
  }
  finalize(rep, tracker);
  return rep;
}

SosPair sos_identity_n3(double x1, double x2, double x3) {
  if (!(x1 > 0.0 && x2 > 0.0 && x3 > 0.0)) {
    throw NotPositive("sos_identity_n3: inputs must be > 0");
  }
  const SosPairLd p = sos3_pair(x1, x2, x3);
  if (sos_rel_deviation(p) > 1e-10) {
    throw Error("sos_identity_n3: the two sides disagree beyond rounding");
  }
  return {static_cast<double>(p.lhs), static_cast<double>(p.rhs)};
}

SosPair sos_identity_quintic(double v, double x1, double x2, double x3) {
  if (!(x1 > 0.0 && x2 > 0.0 && x3 > 0.0)) {
    throw NotPositive("sos_identity_quintic: inputs must be > 0");
  }
  const SosPairLd p = sos_quintic_pair(v, x1, x2, x3);
  if (sos_rel_deviation(p) > 1e-10) {
    throw Error("sos_identity_quintic: the two sides disagree beyond rounding");
  }
  return {static_cast<double>(p.lhs), static_cast<double>(p.rhs)};
}

VerificationReport check_sos3(long samples, std::uint64_t seed) {
  VerificationReport rep;
  rep.inequality_id = "sos3";
  rep.n = 3;
  rep.margin_tol = 1e-10;
  MarginTracker tracker;
  for (long i = 0; i < samples; ++i) {
    const SimplexPoint x = sample_point(3, seed, static_cast<std::uint64_t>(i));
    const SosPairLd p = sos3_pair(x.coords[0], x.coords[1], x.coords[2]);
    const double margin = p.rhs < 0.0L ? static_cast<double>(p.rhs)
                                       : -sos_rel_deviation(p);
    tracker.update(margin, "simplex", x.coords);
    ++rep.samples_tested;
  }
  finalize(rep, tracker);
  return rep;
}

VerificationReport check_sos_quintic(double v, long samples, std::uint64_t seed) {
  VerificationReport rep;
  rep.inequality_id = "sosv";
  rep.n = 3;
  rep.parameter = v;
  rep.margin_tol = 1e-10;
  MarginTracker tracker;
  for (long i = 0; i < samples; ++i) {
    const SimplexPoint x = sample_point(3, seed, static_cast<std::uint64_t>(i));
    const SosPairLd p = sos_quintic_pair(v, x.coords[0], x.coords[1], x.coords[2]);
    const double margin = p.rhs < 0.0L ? static_cast<double>(p.rhs)
                                       : -sos_rel_deviation(p);
    tracker.update(margin, "simplex", x.coords);
    ++rep.samples_tested;
  }
  finalize(rep, tracker);
  return rep;
}

VerificationReport check_euler(double mu, long samples, std::uint64_t seed) {
  const Triangle probes[] = {make_triangle(3, 3, 2), make_triangle(1, 1, 1)};
  return triangle_campaign("euler", mu, probes, samples, seed,
                           [mu](const Triangle& t) {
                             const TriangleDerived d = derive(t);
                             const double per = t.a + t.b + t.c;
                             const double q =
                                 ((t.a - t.b) * (t.a - t.b) +
                                  (t.b - t.c) * (t.b - t.c) +
                                  (t.c - t.a) * (t.c - t.a)) /
                                 (per * per);
                             const double rhs = 2.0 + mu * q;
                             return (d.circumradius / d.inradius - rhs) /
                                    std::max(1.0, std::abs(rhs));
                           });
}

VerificationReport check_quintic_sides(long samples, std::uint64_t seed) {
  const Triangle probes[] = {make_triangle(1, 1, 1), make_triangle(3, 3, 2),
                             make_triangle(3, 4, 5)};
  return triangle_campaign("quintic", 0.0, probes, samples, seed,
                           [](const Triangle& t) {
                             const double rhs =
                                 8.0 * (t.a * t.a + t.b * t.b + t.c * t.c);
                             return quintic_sides_margin(t) / std::max(1.0, rhs);
                           });
}

VerificationReport check_p2rr(long samples, std::uint64_t seed) {
  const Triangle probes[] = {make_triangle(3, 4, 5), make_triangle(1, 1, 1),
                             make_triangle(3, 3, 2)};
  return triangle_campaign("p2rr", 0.0, probes, samples, seed,
                           [](const Triangle& t) {
                             const double p = 0.5 * (t.a + t.b + t.c);
                             const double rhs =
                                 4.0 * t.a * t.b * t.c / p -
                                 5.0 * (p - t.a) * (p - t.b) * (p - t.c) / p;
                             return p2_16Rr_margin(t) /
                                    std::max(1.0, std::abs(rhs));
                           });
}

VerificationReport check_ig(long samples, std::uint64_t seed) {
  const Triangle probes[] = {make_triangle(3, 4, 5), make_triangle(1, 1, 1)};
  VerificationReport rep = triangle_campaign(
      "ig", 0.0, probes, samples, seed, [](const Triangle& t) {
        const double p = 0.5 * (t.a + t.b + t.c);
        return -ig_identity_residual(t) / std::max(1.0, p * p);
      });
  rep.margin_tol = 1e-12;
  rep.verdict = (rep.min_margin < -rep.margin_tol) ? Verdict::VIOLATED
                                                   : Verdict::HOLDS;
  return rep;
}

VerificationReport check_cevian(long samples, std::uint64_t seed) {
  VerificationReport rep;
  rep.inequality_id = "cevian";
  rep.n = 3;
  MarginTracker tracker;
  auto margin_of = [](const Triangle& t, double w1, double w2, double w3) {
    const CevianAreas areas = cevian_areas(t, w1, w2, w3);
    const double rhs = 8.0 * (areas.T[0] + areas.T[1] + areas.T[2]);
    return cevian_margin(areas) / std::max(1.0, rhs);
  };
  {
    const Triangle t = make_triangle(3, 4, 5);
    tracker.update(margin_of(t, 1.0, 1.0, 1.0), "triangle+weights",
                   {t.a, t.b, t.c, 1.0, 1.0, 1.0});
    ++rep.samples_tested;
  }
  for (long i = 0; i < samples; ++i) {
    const SimplexPoint x =
        sample_point(3, seed, 2 * static_cast<std::uint64_t>(i));
    const auto [mn, mx] = std::minmax_element(x.coords.begin(), x.coords.end());
    if (*mn / *mx < kDegenerateRatio) {
      ++rep.samples_rejected;
      continue;
    }
    const SimplexPoint w =
        sample_point(3, seed, 2 * static_cast<std::uint64_t>(i) + 1);
    const Triangle t = ravi_triangle(x);
    tracker.update(margin_of(t, w.coords[0], w.coords[1], w.coords[2]),
                   "triangle+weights",
                   {t.a, t.b, t.c, w.coords[0], w.coords[1], w.coords[2]});
    ++rep.samples_tested;
  }
  finalize(rep, tracker);
  return rep;
}

VerificationReport check_oracle(int n, int grid_resolution) {
  const OracleResult oracle = brute_force_min_g(n, grid_resolution);
  const double lambda = compute_lambda(n).lambda_n;
  VerificationReport rep;
  rep.inequality_id = "oracle";
  rep.n = n;
  rep.parameter = lambda;
  rep.margin_tol = 1e-6;
  rep.samples_tested = oracle.points_evaluated;
  rep.min_margin = (oracle.min_value - lambda) / std::max(1.0, lambda);
  rep.witness_kind = "simplex";
  rep.witness = oracle.argmin.coords;
  rep.verdict = (rep.min_margin < -rep.margin_tol) ? Verdict::VIOLATED
                                                   : Verdict::HOLDS;
  return rep;
}

}  // namespace lambdan
