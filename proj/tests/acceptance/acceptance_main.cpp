// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// High-precision reference radicals are evaluated with a 50-digit float
// type so the double-precision engine is checked against an independent
// oracle.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lambdan/best_constant.hpp"
#include "lambdan/simplex.hpp"
#include "lambdan/triangle.hpp"
#include "lambdan/verify.hpp"

namespace {

using mp = boost::multiprecision::cpp_bin_float_50;
using namespace lambdan;

int failures = 0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

void run_criterion(int id, const std::string& name, double time_limit_s,
                   const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  out.require(elapsed < time_limit_s, "over time budget");
  std::printf("[%s] %2d %-24s (%.2fs)%s%s\n", out.ok ? "PASS" : "FAIL", id,
              name.c_str(), elapsed, out.detail.empty() ? "" : " -- ",
              out.detail.c_str());
  std::fflush(stdout);
  if (!out.ok) ++failures;
}

mp lambda4_reference() { return (582 * sqrt(mp(97)) - 2054) / 121; }

mp t4_reference() { return (5 + sqrt(mp(97))) / 18; }

mp t5_reference() {
  const mp theta = cbrt(8119 + 48 * sqrt(mp(22535)));
  return (theta + 7 + 241 / theta) / 48;
}

mp t6_reference() {
  const mp psi = cbrt(1473 + sqrt(mp(13712905)));
  const mp phi = sqrt(-50 * psi + 481 + 11300 / psi);
  return (9 + phi + sqrt(50 * psi + 962 - 11300 / psi + 47258 / phi)) / 100;
}

double rel_err(double value, const mp& reference) {
  return static_cast<double>(abs(mp(value) - reference) / abs(reference));
}

void golden_constants(Outcome& out) {
  out.require(std::abs(compute_lambda(3).lambda_n - 25.0) <= 1e-12,
              "lambda_3 != 25");
  out.require(rel_err(compute_lambda(4).lambda_n, lambda4_reference()) <= 1e-10,
              "lambda_4 off the radical");
  out.require(std::abs(compute_lambda(5).lambda_n - 40.090307) <= 1e-5,
              "lambda_5 off 40.090307");
  out.require(std::abs(compute_lambda(6).lambda_n - 52.358913) <= 1e-5,
              "lambda_6 off 52.358913");
}

void lambda4_adjudication(Outcome& out) {
  const OracleResult r = brute_force_min_g(4, 120);
  std::ostringstream ss;
  ss.precision(10);
  ss << "grid min " << r.min_value << " over " << r.points_evaluated
     << " points";
  out.detail = ss.str();
  out.require(std::abs(r.min_value - 30.39707) <= 0.2,
              "grid minimum not within 0.2 of 30.39707");
  out.require(r.min_value < 30.42,
              "grid minimum not below the misprinted 30.423077");
}

void roots(Outcome& out) {
  const RootBracket t3 = solve_tn(3);
  out.require(std::abs(t3.root_estimate - 0.75) <= 1e-14 && t3.width <= 1e-14,
              "t_3 != 3/4");
  out.require(std::abs(static_cast<double>(mp(solve_tn(4).root_estimate) -
                                           t4_reference())) <= 1e-12,
              "t_4 off (5+sqrt(97))/18");
  out.require(std::abs(static_cast<double>(mp(solve_tn(5).root_estimate) -
                                           t5_reference())) <= 1e-9,
              "t_5 off the theta formula");
  out.require(std::abs(static_cast<double>(mp(solve_tn(6).root_estimate) -
                                           t6_reference())) <= 1e-9,
              "t_6 off the phi/psi formula");
}

void theorem1_refinements(Outcome& out) {
  for (int n = 3; n <= 200; ++n) {
    const BestConstantResult r = compute_lambda(n);
    out.require(r.lower_bound <= r.lambda_n * (1 + 1e-9) &&
                    r.lambda_n <= r.upper_bound * (1 + 1e-9),
                "double bound failed at n=" + std::to_string(n));
    out.require(r.lambda_n <= r.improved_upper + 1e-9,
                "improved bound failed at n=" + std::to_string(n));
    if (n > 3) {
      out.require(r.improved_upper < r.upper_bound,
                  "improved bound not sharper at n=" + std::to_string(n));
    }
    out.require(r.t_n >= static_cast<double>(n) / (n + 1) - 1e-12,
                "t_n floor failed at n=" + std::to_string(n));
  }
  out.require(solve_tn(3).root_estimate == 0.75, "t_3 not exactly n/(n+1)");
}

void descartes_certificate(Outcome& out) {
  for (int n = 3; n <= 1000; ++n) {
    if (sign_changes(build_pn_prime(n)) != 1) {
      out.require(false, "sign changes != 1 at n=" + std::to_string(n));
      return;
    }
    if (!(build_pn_prime(n) == derivative(build_pn(n)))) {
      out.require(false, "p_n' mismatch at n=" + std::to_string(n));
      return;
    }
  }
}

void oracle_structure(Outcome& out) {
  const OracleResult r = brute_force_min_g(3, 400);
  out.require(std::abs(r.min_value - 25.0) <= 0.05, "grid min not 25 +- 0.05");
  std::vector<double> sorted = r.argmin.coords;
  std::sort(sorted.begin(), sorted.end());
  const double step = 1.0 / 400 + 1e-12;
  out.require(std::abs(sorted[0] - 0.25) <= step &&
                  std::abs(sorted[1] - 0.25) <= step &&
                  std::abs(sorted[2] - 0.5) <= step,
              "argmin not at a permutation of (1/4,1/4,1/2)");
  out.require(r.near_reduced_family, "near_reduced_family flag not set");
}

void inequality_campaigns(Outcome& out) {
  for (int n = 3; n <= 8; ++n) {
    const double lambda = compute_lambda(n).lambda_n;
    const auto pts = sample_random(n, 100000, static_cast<std::uint64_t>(n));
    const VerificationReport hold = check_ineq1(n, lambda, pts, true);
    out.require(hold.verdict == Verdict::HOLDS && hold.min_margin >= -1e-8,
                "ineq1 failed at lambda_n, n=" + std::to_string(n));

    const auto few = sample_random(n, 1000, static_cast<std::uint64_t>(n));
    const VerificationReport broken = check_ineq1(n, lambda + 0.1, few, true);
    out.require(broken.verdict == Verdict::VIOLATED,
                "ineq1 not violated at lambda_n + 0.1, n=" + std::to_string(n));
    if (broken.verdict == Verdict::VIOLATED) {
      out.require(
          ineq1_margin(n, lambda + 0.1, SimplexPoint{broken.witness}) < 0,
          "witness does not replay at n=" + std::to_string(n));
    }
  }
  for (int n = 3; n <= 5; ++n) {
    const auto pts = sample_random(n, 10000, 5);
    out.require(check_ineq4(n, nu_best(n), pts).verdict == Verdict::HOLDS,
                "ineq4 failed at nu_n, n=" + std::to_string(n));
  }
  for (int n = 3; n <= 8; ++n) {
    const auto pts = sample_random(n, 10000, 6);
    out.require(check_ineq5(n, pts).verdict == Verdict::HOLDS,
                "ineq5 failed at n=" + std::to_string(n));
  }
  const auto pts2 = sample_random(2, 10000, 2);
  for (double lambda : {10.0, 1e3, 1e6}) {
    const VerificationReport rep = check_ineq1(2, lambda, pts2, false);
    out.require(rep.verdict == Verdict::HOLDS,
                "n=2 failed at lambda=" + std::to_string(lambda));
  }
}

void identities(Outcome& out) {
  const VerificationReport s3 = check_sos3(10000, 1);
  out.require(s3.verdict == Verdict::HOLDS && s3.min_margin >= -1e-10,
              "n=3 SOS identity drifted");
  for (double v : {1.0, 3.0, 7.0, 10.0}) {
    const VerificationReport sv = check_sos_quintic(v, 10000, 1);
    out.require(sv.verdict == Verdict::HOLDS && sv.min_margin >= -1e-10,
                "quintic SOS identity drifted at v=" + std::to_string(v));
  }
  for (int n : {3, 4}) {
    const double x = 1.0 / n;
    std::vector<double> gamma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      gamma[static_cast<std::size_t>(i)] = (i % 2 == 0) ? 1.0 : -1.0;
    }
    if (n % 2 == 1) gamma.back() = 0.0;
    const double limit = 2.0 / (std::pow(n, n) * std::pow(x, n - 1));
    const double ratio = lemma1_ratio(n, x, gamma, 1e-4);
    out.require(std::abs(ratio - limit) <= 1e-3,
                "lemma1 ratio off at n=" + std::to_string(n));
  }
}

void geometry(Outcome& out) {
  out.require(std::abs(euler_refined_margin(make_triangle(3, 3, 2), 8.0)) <= 1e-12,
              "euler margin not zero at (3,3,2)");
  out.require(std::abs(euler_refined_margin(make_triangle(1, 1, 1), 8.0)) <= 1e-12,
              "euler margin not zero at (1,1,1)");
  out.require(std::abs(quintic_sides_margin(make_triangle(1, 1, 1))) <= 1e-12 &&
                  std::abs(quintic_sides_margin(make_triangle(3, 3, 2))) <= 1e-12,
              "quintic equality cases failed");
  out.require(ig_identity_residual(make_triangle(3, 4, 5)) <= 1e-14,
              "(3,4,5) incenter-centroid identity failed");
  {
    const TriangleDerived d = derive(make_triangle(3, 4, 5));
    const double p = d.semiperimeter;
    const double value = (p * p + 5 * d.inradius * d.inradius -
                          16 * d.circumradius * d.inradius) / 9.0;
    out.require(std::abs(value - 1.0 / 9) <= 1e-12,
                "(3,4,5) |IG|^2 is not 1/9");
  }

  long rejected = 0;
  for (int i = 0; i < 100000; ++i) {
    const SimplexPoint x = sample_point(3, 9, static_cast<std::uint64_t>(i));
    const auto [mn, mx] = std::minmax_element(x.coords.begin(), x.coords.end());
    if (*mn / *mx < 1e-6) {
      ++rejected;
      continue;
    }
    const Triangle t = ravi_triangle(x);
    if (euler_refined_margin(t, 8.0) < -1e-10) {
      out.require(false, "euler margin negative at sample " + std::to_string(i));
      break;
    }
    if (quintic_sides_margin(t) < -1e-10) {
      out.require(false, "quintic margin negative at sample " + std::to_string(i));
      break;
    }
    if (p2_16Rr_margin(t) < -1e-10) {
      out.require(false, "p^2 >= 16Rr - 5r^2 failed at sample " + std::to_string(i));
      break;
    }
    if (i < 1000) {
      const double p = 0.5 * (t.a + t.b + t.c);
      if (ig_identity_residual(t) > 1e-12 * std::max(1.0, p * p)) {
        out.require(false, "IG identity drifted at sample " + std::to_string(i));
        break;
      }
    }
  }
  out.require(rejected < 100, "degeneracy guard rejected too many samples");

  out.require(std::abs(cevian_margin(cevian_areas(make_triangle(3, 4, 5), 1, 1, 1))) <= 1e-12,
              "cevian margin not zero at the centroid");
  const VerificationReport cev = check_cevian(10000, 9);
  out.require(cev.verdict == Verdict::HOLDS && cev.min_margin >= -1e-10,
              "cevian campaign failed");
}

void appendix(Outcome& out) {
  for (int n = 3; n <= 10; ++n) {
    for (int j = 1; j <= 1000; ++j) {
      const double x = static_cast<double>(j) / (1000.0 * n);
      const double res = appendix_reduced_residual(n, x);
      if (res < 0.0 || (j < 1000 && res <= 1e-10) || (j == 1000 && res > 1e-25)) {
        out.require(false, "appendix residual misbehaved at n=" +
                               std::to_string(n) + ", j=" + std::to_string(j));
        return;
      }
    }
  }
  for (int n = 3; n <= 6; ++n) {
    const auto pts = sample_random(n, 2000, 10);
    out.require(
        check_ahg(n, static_cast<double>(n - 1), pts).verdict == Verdict::HOLDS,
        "A^l H >= G^{l+1} failed at l=n-1, n=" + std::to_string(n));
    out.require(check_ahg(n, static_cast<double>(n), pts).verdict == Verdict::HOLDS,
                "A^l H >= G^{l+1} failed at l=n, n=" + std::to_string(n));
    for (double l : {0.0, (n - 1) / 2.0}) {
      const VerificationReport rep = check_ahg(n, l, pts);
      out.require(rep.verdict == Verdict::VIOLATED && !rep.witness.empty(),
                  "no counterexample for l=" + std::to_string(l) +
                      ", n=" + std::to_string(n));
    }
  }
}

}  // namespace

int main() {
  run_criterion(1, "golden-constants", 1.0, golden_constants);
  run_criterion(2, "lambda4-adjudication", 120.0, lambda4_adjudication);
  run_criterion(3, "radical-roots", 1.0, roots);
  run_criterion(4, "theorem1-refinements", 5.0, theorem1_refinements);
  run_criterion(5, "descartes-certificate", 5.0, descartes_certificate);
  run_criterion(6, "oracle-structure", 60.0, oracle_structure);
  run_criterion(7, "inequality-campaigns", 60.0, inequality_campaigns);
  run_criterion(8, "sos-and-lemma1", 30.0, identities);
  run_criterion(9, "geometry", 120.0, geometry);
  run_criterion(10, "appendix-and-ahg", 30.0, appendix);

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criterion(s) failed\n", failures);
  return 1;
}
