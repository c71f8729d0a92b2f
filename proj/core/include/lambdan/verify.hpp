#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lambdan/simplex.hpp"
#include "lambdan/triangle.hpp"

namespace lambdan {

/// Margins are normalized by max(1, |rhs|) of the inequality under test;
/// anything below -kMarginTol counts as a violation.  All equality cases
/// of the verified inequalities are exact algebraic points, so rounding
/// noise stays orders of magnitude inside this band.
inline constexpr double kMarginTol = 1e-9;

enum class Verdict { HOLDS, VIOLATED, INCONCLUSIVE };

const char* to_string(Verdict v);

/// Outcome of a verification campaign.  The witness is the margin argmin
/// (always recorded); a VIOLATED verdict additionally means the margin at
/// the witness reproduces the negative value on re-evaluation.
struct VerificationReport {
  std::string inequality_id;
  int n = 0;
  double parameter = 0.0;  // lambda, nu, mu, v, or l, as applicable
  long samples_tested = 0;
  long samples_rejected = 0;  // near-degenerate triangles skipped
  double min_margin = 0.0;
  double margin_tol = kMarginTol;  // threshold used for the verdict
  std::string witness_kind;        // "simplex", "triangle", "triangle+weights", "scalar"
  std::vector<double> witness;
  Verdict verdict = Verdict::HOLDS;
};

/// Right-hand side of the unit-sum inequality:
/// lambda / (1 + n^{n-2} (lambda - n^2) prod x).  Its denominator is
/// positive on the whole open simplex for lambda > 0.
double f_rhs(int n, double lambda, const SimplexPoint& p);

/// Normalized margin sum(1/x) - f_rhs at one point.
double ineq1_margin(int n, double lambda, const SimplexPoint& p);

/// Normalized margin of the reversed inequality at one point.
double ineq4_margin(int n, double nu, const SimplexPoint& p);

/// Normalized margin of the nu = 0 case at one point.
double ineq5_margin(int n, const SimplexPoint& p);

/// Log-space margin l ln A + ln H - (l+1) ln G at one point.
double ahg_margin(double l, const SimplexPoint& p);

/// Campaign for the unit-sum inequality at a given lambda: margins over
/// the supplied points, plus (optionally, n >= 3) a 1000-point scan of the
/// reduced family, which is where the global minimum of the objective
/// lives.  n = 2 is accepted (the inequality holds there for every
/// lambda > 0) but cannot take the reduced scan.
VerificationReport check_ineq1(int n, double lambda,
                               std::span<const SimplexPoint> points,
                               bool include_reduced_scan);

/// s_1^n s_{n-1} + n^{n-2}(lambda - n^2) s_{n-1} s_n - lambda s_1^{n-1} s_n
/// on arbitrary positive xs (no unit-sum requirement); nonnegative exactly
/// when the unit-sum inequality holds at xs / sum(xs).
double sym_poly_residual(int n, double lambda, std::span<const double> xs);

struct OracleResult {
  int n = 0;
  int grid_resolution = 0;
  long points_evaluated = 0;
  double min_value = 0.0;
  SimplexPoint argmin;
  bool near_reduced_family = false;  // n-1 smallest coords within one grid step
};

/// Brute-force minimization of g over the full lattice of resolution m —
/// the independent oracle for lambda_n and for the reduced-family shape of
/// the minimizer.  Desk-scale guard: n in {3,4,5}, m >= 4n.
OracleResult brute_force_min_g(int n, int m);

/// The sharp constant n^2 - n^n/(n-1)^{n-1} of the reversed inequality.
double nu_best(int n);

/// Campaign for sum(1/x) <= nu + (n^2-nu)/(n^n prod x): margins over the
/// supplied points plus a scan of the one-small-coordinate family
/// (x, (1-x)/(n-1), ...), where violations appear once nu exceeds nu_best.
VerificationReport check_ineq4(int n, double nu,
                               std::span<const SimplexPoint> points);

/// Campaign for sum(1/x) <= 1/(n^{n-2} prod x) (the nu = 0 case; equality
/// only at the centroid).
VerificationReport check_ineq5(int n, std::span<const SimplexPoint> points);

/// Residual of the reduced form of the nu = 0 inequality along
/// (x, (1-x)/(n-1), ..., (1-x)/(n-1)) for 0 < x <= 1/n:
/// (nx-1)^2 ((n-2)(nx)^{n-3} + ... + 1), zero only at nx = 1.
/// Cross-checked in sign against the unreduced two-sided form.
double appendix_reduced_residual(int n, double x);

struct Means {
  double arithmetic = 0.0;
  double harmonic = 0.0;
  double geometric = 0.0;
};

/// Arithmetic, harmonic and geometric means; the classical chain
/// A >= G >= H is asserted up to rounding.
Means means(std::span<const double> xs);

/// Campaign for A^l H >= G^{l+1}, evaluated in log space.  Holds for
/// l >= n-1.  For l < n-1 the campaign also scans the counterexample
/// family (1, ..., 1, 10^-k); if no violation is representable the
/// verdict is INCONCLUSIVE rather than HOLDS.
VerificationReport check_ahg(int n, double l,
                             std::span<const SimplexPoint> points);

/// Margin n^2 (1-s^n) / (s (1-s^{n-1})) - n^3/(n-1) for s in (0,1),
/// computed through geometric sums so it stays accurate near s = 1,
/// where the margin tends to 0.
double check_lower_bound_form(int n, double s);

/// Scan of the margin above over a uniform s-grid.
VerificationReport check_lower_bound_scan(int n, long samples);

struct SosPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// s_1^3 s_2 + 48 s_2 s_3 - 25 s_1^2 s_3 against its sum-of-squares form
/// sum_cyc x1 (x2-x3)^2 (3x1-x2-x3)^2; the two sides are asserted equal to
/// 1e-10 relative.
SosPair sos_identity_n3(double x1, double x2, double x3);

/// The general-v quintic in a = x2+x3, b = x1+x3, c = x1+x2:
///   v^2 S3(a^5) - v(v+2) S6(a^4 b) + 2v S6(a^3 b^2)
///     + (v+2)^2 S3(a^3 bc) - 4(v+1) S3(a b^2 c^2)
/// (S3 = cyclic sum, S6 = all six permutations) against
/// sum_cyc 4 x1 (x2-x3)^2 (v x1 - x2 - x3)^2, asserted equal.
SosPair sos_identity_quintic(double v, double x1, double x2, double x3);

/// Identity campaigns over random positive triples: the margin is the
/// negated relative deviation |lhs-rhs|/max(1,|lhs|), with tolerance 1e-10.
VerificationReport check_sos3(long samples, std::uint64_t seed);
VerificationReport check_sos_quintic(double v, long samples, std::uint64_t seed);

/// Geometry campaigns over Ravi-sampled triangles (near-degenerate samples
/// with min(x)/max(x) < 1e-6 are rejected and counted).  Each starts with
/// the deterministic tight configurations.
VerificationReport check_euler(double mu, long samples, std::uint64_t seed);
VerificationReport check_quintic_sides(long samples, std::uint64_t seed);
VerificationReport check_p2rr(long samples, std::uint64_t seed);
VerificationReport check_ig(long samples, std::uint64_t seed);
VerificationReport check_cevian(long samples, std::uint64_t seed);

/// Report wrapper around brute_force_min_g: margin is
/// (min_value - lambda_n)/max(1, lambda_n) with tolerance 1e-6, so HOLDS
/// certifies that the full-grid minimum never undercuts lambda_n.
VerificationReport check_oracle(int n, int grid_resolution);

}  // namespace lambdan
