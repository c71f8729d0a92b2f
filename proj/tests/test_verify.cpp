#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "lambdan/best_constant.hpp"
#include "lambdan/verify.hpp"

using namespace lambdan;

namespace {

std::uint64_t rng_state = 0x9E3779B97F4A7C15ULL;
double next_unit() {
  rng_state ^= rng_state >> 12;
  rng_state ^= rng_state << 25;
  rng_state ^= rng_state >> 27;
  return ((rng_state * 0x2545F4914F6CDD1DULL) >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

}  // namespace

TEST_CASE("f_rhs values and monotonicity") {
  const SimplexPoint tight = make_point({0.25, 0.25, 0.5});
  CHECK(f_rhs(3, 25.0, tight) == doctest::Approx(10.0).epsilon(1e-14));
  // The (lambda - n^2) term vanishes, so the value is n^2 at any point.
  CHECK(f_rhs(3, 9.0, tight) == 9.0);
  CHECK(f_rhs(4, 16.0, make_point({0.1, 0.2, 0.3, 0.4})) == 16.0);

  const SimplexPoint p = sample_point(3, 5, 0);
  double prev = 0.0;
  for (int lam = 1; lam <= 100; ++lam) {
    const double f = f_rhs(3, lam, p);
    CHECK(f >= prev);
    prev = f;
  }
  CHECK_THROWS_AS(f_rhs(3, -1.0, tight), NotPositive);
}

TEST_CASE("check_ineq1 holds at the sharp constant") {
  const auto pts = sample_random(3, 10000, 7);
  const VerificationReport rep = check_ineq1(3, 25.0, pts, true);
  CHECK(rep.verdict == Verdict::HOLDS);
  CHECK(rep.min_margin >= -1e-9);
  CHECK(rep.samples_tested == 11000);  // samples plus the reduced scan
}

TEST_CASE("check_ineq1 detects any constant above the sharp one") {
  const auto pts = sample_random(3, 1000, 7);
  const VerificationReport rep = check_ineq1(3, 25.5, pts, true);
  REQUIRE(rep.verdict == Verdict::VIOLATED);
  REQUIRE(rep.witness_kind == "simplex");
  REQUIRE(rep.witness.size() == 3);
  // The tight point of the n = 3 case, up to the scan step.
  std::vector<double> w = rep.witness;
  std::sort(w.begin(), w.end());
  CHECK(w[0] == doctest::Approx(0.25).epsilon(2e-3));
  CHECK(w[1] == doctest::Approx(0.25).epsilon(2e-3));
  CHECK(w[2] == doctest::Approx(0.5).epsilon(2e-3));
  // Replayable: the margin at the stored witness reproduces the violation,
  // and the witness's objective value sits below the tested constant.
  const SimplexPoint witness{rep.witness};
  CHECK(ineq1_margin(3, 25.5, witness) < 0.0);
  CHECK(eval_g(witness) < 25.5);
}

TEST_CASE("check_ineq1 accepts n = 2 for any lambda") {
  const auto pts = sample_random(2, 10000, 11);
  for (double lambda : {10.0, 1e3, 1e6}) {
    const VerificationReport rep = check_ineq1(2, lambda, pts, false);
    CHECK(rep.verdict == Verdict::HOLDS);
    CHECK(rep.min_margin >= -1e-9);
  }
  CHECK_THROWS_AS(check_ineq1(2, 10.0, pts, true), BadOrder);
}

TEST_CASE("sym_poly_residual exact cancellations") {
  const double ones3[] = {1, 1, 1};
  CHECK(sym_poly_residual(3, 25.0, ones3) == 0.0);
  const double ray[] = {1, 1, 2};
  CHECK(sym_poly_residual(3, 25.0, ray) == 0.0);
  const double ones4[] = {1, 1, 1, 1};
  for (double lam : {7.5, 16.0, 33.25}) {
    CHECK(sym_poly_residual(4, lam, ones4) == 0.0);
  }
}

TEST_CASE("sym_poly_residual agrees in sign with the pointwise margin") {
  rng_state = 77;
  int compared = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 3 + static_cast<int>(next_unit() * 3);
    std::vector<double> xs(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double& x : xs) {
      x = 0.05 + next_unit();
      sum += x;
    }
    const double lambda = next_unit() * 2.0 * n * n + 1.0;
    const double residual = sym_poly_residual(n, lambda, xs);
    std::vector<double> unit = xs;
    for (double& x : unit) x /= sum;
    const double margin = ineq1_margin(n, lambda, SimplexPoint{unit});
    if (std::abs(residual) < 1e-10 || std::abs(margin) < 1e-12) continue;
    CHECK((residual > 0) == (margin > 0));
    ++compared;
  }
  CHECK(compared > 9000);
}

TEST_CASE("brute_force_min_g at n = 3") {
  const OracleResult r = brute_force_min_g(3, 60);
  CHECK(r.min_value >= 25.0 - 1e-9);
  CHECK(r.min_value <= 25.05);
  CHECK(r.near_reduced_family);
  std::vector<double> sorted = r.argmin.coords;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted[0] == doctest::Approx(0.25).epsilon(2.0 / 60));
  CHECK(sorted[2] == doctest::Approx(0.5).epsilon(2.0 / 60));

  CHECK_THROWS_AS(brute_force_min_g(3, 3), ResolutionTooSmall);
  CHECK_THROWS_AS(brute_force_min_g(3, 11), ResolutionTooSmall);
  CHECK_THROWS_AS(brute_force_min_g(6, 60), BadOrder);
}

TEST_CASE("brute_force_min_g refines monotonically on nested grids") {
  for (int n : {3, 4}) {
    const double lambda = compute_lambda(n).lambda_n;
    double prev = 1e300;
    for (int m : {4 * n, 8 * n, 16 * n}) {
      const OracleResult r = brute_force_min_g(n, m);
      CHECK(r.min_value <= prev);
      CHECK(r.min_value >= lambda - 1e-6);
      prev = r.min_value;
    }
  }
}

TEST_CASE("nu_best values") {
  CHECK(nu_best(3) == doctest::Approx(2.25).epsilon(1e-15));
  CHECK(nu_best(4) == doctest::Approx(176.0 / 27.0).epsilon(1e-14));
}

TEST_CASE("check_ineq4") {
  const SimplexPoint tight = make_point({0.25, 0.25, 0.5});
  // Hand value: margin 0.25 against rhs 10.25 before normalization.
  CHECK(ineq4_margin(3, 2.25, tight) ==
        doctest::Approx(0.25 / 10.25).epsilon(1e-12));

  const auto pts3 = sample_random(3, 10000, 3);
  CHECK(check_ineq4(3, nu_best(3), pts3).verdict == Verdict::HOLDS);
  const auto pts4 = sample_random(4, 10000, 4);
  CHECK(check_ineq4(4, 176.0 / 27.0, pts4).verdict == Verdict::HOLDS);
  const auto pts5 = sample_random(5, 10000, 5);
  CHECK(check_ineq4(5, nu_best(5), pts5).verdict == Verdict::HOLDS);

  const VerificationReport bad = check_ineq4(3, 2.25 + 0.01, pts3);
  REQUIRE(bad.verdict == Verdict::VIOLATED);
  REQUIRE(bad.witness.size() == 3);
  CHECK(ineq4_margin(3, 2.26, SimplexPoint{bad.witness}) < 0.0);
}

TEST_CASE("check_ineq5") {
  const SimplexPoint tight = make_point({0.25, 0.25, 0.5});
  // Hand value: 32/3 - 10 = 2/3 against rhs 32/3.
  CHECK(ineq5_margin(3, tight) == doctest::Approx((2.0 / 3) / (32.0 / 3)).epsilon(1e-12));

  for (int n = 3; n <= 8; ++n) {
    const auto pts = sample_random(n, 10000, 17);
    const VerificationReport rep = check_ineq5(n, pts);
    CHECK(rep.verdict == Verdict::HOLDS);
    CHECK(rep.min_margin >= -1e-9);
  }

  // Near-equality beside the centroid.
  const SimplexPoint near = make_point({0.2 + 1e-7, 0.2 - 1e-7, 0.2, 0.2, 0.2});
  CHECK(std::abs(ineq5_margin(5, near)) <= 1e-9);
}

TEST_CASE("appendix_reduced_residual") {
  CHECK(appendix_reduced_residual(3, 0.25) == 0.0625);
  CHECK(appendix_reduced_residual(5, 0.1) ==
        doctest::Approx(0.6875).epsilon(1e-14));
  CHECK(appendix_reduced_residual(4, 0.25) <= 1e-25);
  CHECK_THROWS_AS(appendix_reduced_residual(3, 0.0), OutOfRange);
  CHECK_THROWS_AS(appendix_reduced_residual(3, 0.5), OutOfRange);

  for (int n = 3; n <= 10; ++n) {
    const int grid = 1000;
    for (int j = 1; j <= grid; ++j) {
      const double x = static_cast<double>(j) / (grid * n);
      const double res = appendix_reduced_residual(n, x);
      if (j < grid) {
        CHECK(res > 1e-10);
      } else {
        CHECK(res <= 1e-25);  // zero only at x = 1/n
      }
    }
  }
}

TEST_CASE("means") {
  const double equal[] = {1, 1, 1};
  const Means me = means(equal);
  CHECK(me.arithmetic == 1.0);
  CHECK(me.harmonic == 1.0);
  CHECK(me.geometric == doctest::Approx(1.0).epsilon(1e-15));

  const double two[] = {1, 4};
  const Means m2 = means(two);
  CHECK(m2.arithmetic == 2.5);
  CHECK(m2.harmonic == doctest::Approx(1.6).epsilon(1e-15));
  CHECK(m2.geometric == doctest::Approx(2.0).epsilon(1e-14));

  rng_state = 5;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> xs(4);
    for (double& x : xs) x = 0.01 + 10.0 * next_unit();
    const Means m = means(xs);  // the A >= G >= H chain is asserted inside
    CHECK(m.arithmetic >= m.harmonic - 1e-12);
  }

  const double bad[] = {1.0, -2.0};
  CHECK_THROWS_AS(means(bad), NotPositive);
}

TEST_CASE("check_ahg") {
  const auto pts = sample_random(3, 10000, 23);
  CHECK(check_ahg(3, 2.0, pts).verdict == Verdict::HOLDS);

  const VerificationReport one = check_ahg(3, 1.0, pts);
  REQUIRE(one.verdict == Verdict::VIOLATED);
  CHECK(ahg_margin(1.0, SimplexPoint{one.witness}) < 0.0);

  // The documented asymptotics at (1, 1, 1e-6).
  const double family[] = {1.0, 1.0, 1e-6};
  const Means m = means(family);
  CHECK(m.arithmetic * m.harmonic < m.geometric * m.geometric);

  // Equality at the all-equal point for l = n-1.
  const SimplexPoint centroid = make_point({0.25, 0.25, 0.25, 0.25});
  CHECK(std::abs(ahg_margin(3.0, centroid)) <= 1e-12);

  for (int n = 3; n <= 6; ++n) {
    const auto pn = sample_random(n, 2000, 29);
    CHECK(check_ahg(n, static_cast<double>(n - 1), pn).verdict == Verdict::HOLDS);
    for (double l : {0.0, (n - 1) / 2.0}) {
      const VerificationReport rep = check_ahg(n, l, pn);
      CHECK(rep.verdict == Verdict::VIOLATED);
      CHECK(!rep.witness.empty());
    }
  }
}

TEST_CASE("check_lower_bound_form") {
  CHECK(check_lower_bound_form(3, 0.5) == doctest::Approx(7.5).epsilon(1e-14));
  const double near_one = check_lower_bound_form(3, 0.999);
  CHECK(near_one >= 0.0);
  CHECK(near_one <= 0.01);
  CHECK(check_lower_bound_form(10, 0.9) > 0.0);
  CHECK_THROWS_AS(check_lower_bound_form(3, 0.0), OutOfRange);
  CHECK_THROWS_AS(check_lower_bound_form(3, 1.0), OutOfRange);

  for (int n = 3; n <= 10; ++n) {
    const VerificationReport rep = check_lower_bound_scan(n, 2000);
    CHECK(rep.verdict == Verdict::HOLDS);
    CHECK(rep.min_margin >= -1e-12);
  }
}

TEST_CASE("sos identity for the n = 3 constant") {
  const SosPair at_ones = sos_identity_n3(1, 1, 1);
  CHECK(at_ones.lhs == 0.0);
  CHECK(at_ones.rhs == 0.0);

  const SosPair at_ray = sos_identity_n3(1, 1, 2);
  CHECK(at_ray.lhs == 0.0);
  CHECK(at_ray.rhs == 0.0);

  const SosPair generic = sos_identity_n3(1, 2, 3);
  CHECK(generic.lhs == doctest::Approx(144.0).epsilon(1e-14));
  CHECK(generic.rhs == doctest::Approx(144.0).epsilon(1e-14));
  CHECK(generic.lhs > 0.0);
}

TEST_CASE("general-v quintic identity") {
  const SosPair v3 = sos_identity_quintic(3, 1, 1, 1);
  CHECK(v3.lhs == 0.0);
  CHECK(v3.rhs == 0.0);
  const SosPair v3ray = sos_identity_quintic(3, 1, 1, 2);
  CHECK(v3ray.lhs == doctest::Approx(v3ray.rhs).epsilon(1e-12));

  rng_state = 31;
  for (double v : {1.0, 3.0, 7.0, 10.0}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const double x1 = 0.01 + next_unit();
      const double x2 = 0.01 + next_unit();
      const double x3 = 0.01 + next_unit();
      const SosPair p = sos_identity_quintic(v, x1, x2, x3);
      CHECK(p.rhs >= 0.0);
      CHECK(std::abs(p.lhs - p.rhs) <= 1e-10 * std::max(1.0, std::abs(p.lhs)));
    }
  }
}

TEST_CASE("identity campaigns") {
  CHECK(check_sos3(10000, 3).verdict == Verdict::HOLDS);
  for (double v : {1.0, 3.0, 7.0, 10.0}) {
    CHECK(check_sos_quintic(v, 10000, 3).verdict == Verdict::HOLDS);
  }
}

TEST_CASE("oracle report") {
  const VerificationReport rep = check_oracle(3, 60);
  CHECK(rep.verdict == Verdict::HOLDS);
  CHECK(rep.min_margin >= -1e-6);
  CHECK(rep.samples_tested > 1000);
}
