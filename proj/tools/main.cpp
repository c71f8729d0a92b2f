#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lambdan/best_constant.hpp"
#include "lambdan/errors.hpp"
#include "lambdan/simplex.hpp"
#include "lambdan/triangle.hpp"
#include "lambdan/verify.hpp"
#include "render.hpp"

namespace {

using lambdan::cli::Cell;
using lambdan::cli::OutputFormat;
using lambdan::cli::Row;

// Exit codes: 0 success / HOLDS, 1 VIOLATED or INCONCLUSIVE (a finding,
// not a failure), 2 usage or argument error.
constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitUsage;
  }
  f << text;
  return kExitOk;
}

const std::vector<std::string> kReportHeader = {
    "target",     "n",          "parameter", "samples",      "rejected",
    "min_margin", "margin_tol", "verdict",   "witness_kind", "witness"};

Row report_row(const lambdan::VerificationReport& rep) {
  return Row{rep.inequality_id,
             static_cast<long long>(rep.n),
             rep.parameter,
             static_cast<long long>(rep.samples_tested),
             static_cast<long long>(rep.samples_rejected),
             rep.min_margin,
             rep.margin_tol,
             std::string(lambdan::to_string(rep.verdict)),
             rep.witness_kind,
             rep.witness};
}

int run_lambda(int n, double tol, OutputFormat fmt, int digits,
               const std::string& out) {
  if (n == 2) {
    std::cerr << "error: n = 2 admits no best constant; the inequality holds "
                 "for every lambda > 0\n";
    return kExitUsage;
  }
  if (n < 2) {
    std::cerr << "error: --n must be >= 3\n";
    return kExitUsage;
  }
  const lambdan::BestConstantResult r = lambdan::compute_lambda(n, tol);
  const std::vector<std::string> header = {
      "n",           "t_n",           "p_at_tn",       "lambda",
      "lower_bound", "upper_bound",   "improved_upper", "bracket_width",
      "iterations"};
  const std::vector<Row> rows = {
      Row{static_cast<long long>(r.n), r.t_n, r.p_at_tn, r.lambda_n,
          r.lower_bound, r.upper_bound, r.improved_upper, r.t_bracket.width,
          static_cast<long long>(r.t_bracket.iterations)}};
  return emit(lambdan::cli::render_table(header, rows, fmt, digits), out);
}

int run_table(int from, int to, double tol, OutputFormat fmt, int digits,
              const std::string& out) {
  if (from < 3 || from > to || to > 10000) {
    std::cerr << "error: need 3 <= --from <= --to <= 10000\n";
    return kExitUsage;
  }
  const std::vector<std::string> header = {"n",           "t_n",
                                           "lambda",      "lower_bound",
                                           "upper_bound", "improved_upper"};
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(to - from + 1));
  for (int n = from; n <= to; ++n) {
    const lambdan::BestConstantResult r = lambdan::compute_lambda(n, tol);
    rows.push_back(Row{static_cast<long long>(n), r.t_n, r.lambda_n,
                       r.lower_bound, r.upper_bound, r.improved_upper});
  }
  return emit(lambdan::cli::render_table(header, rows, fmt, digits), out);
}

int run_scan(int n, long points, OutputFormat fmt, int digits,
             const std::string& out) {
  if (n < 3) {
    std::cerr << "error: --n must be >= 3\n";
    return kExitUsage;
  }
  if (points < 10) {
    std::cerr << "error: --points must be >= 10\n";
    return kExitUsage;
  }
  const std::vector<std::string> header = {"t", "p_n", "g_reduced"};
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(points));
  for (long i = 1; i <= points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points);
    rows.push_back(
        Row{t, lambdan::eval_pn(n, t), lambdan::eval_g_reduced(n, t)});
  }
  return emit(lambdan::cli::render_table(header, rows, fmt, digits), out);
}

bool needs_param(const std::string& target) {
  return target == "ineq1" || target == "ineq4" || target == "ahg" ||
         target == "euler" || target == "sosv";
}

double default_param(const std::string& target, int n) {
  if (target == "ineq1") {
    if (n < 3) {
      throw Usage("--param is required for ineq1 with n = 2 (no best constant exists)");
    }
    return lambdan::compute_lambda(n).lambda_n;
  }
  if (target == "ineq4") return lambdan::nu_best(n);
  if (target == "ahg") return static_cast<double>(n - 1);
  if (target == "euler") return 8.0;
  if (target == "sosv") return 3.0;
  return 0.0;
}

lambdan::VerificationReport run_campaign(const std::string& target, int n,
                                         double param, long samples,
                                         std::uint64_t seed, int grid_res) {
  using namespace lambdan;
  if (target == "ineq1") {
    const auto pts = sample_random(n, samples, seed);
    return check_ineq1(n, param, pts, n >= 3);
  }
  if (target == "ineq4") {
    const auto pts = sample_random(n, samples, seed);
    return check_ineq4(n, param, pts);
  }
  if (target == "ineq5") {
    const auto pts = sample_random(n, samples, seed);
    return check_ineq5(n, pts);
  }
  if (target == "ahg") {
    const auto pts = sample_random(n, samples, seed);
    return check_ahg(n, param, pts);
  }
  if (target == "sos3") return check_sos3(samples, seed);
  if (target == "sosv") return check_sos_quintic(param, samples, seed);
  if (target == "lowerform") return check_lower_bound_scan(n, samples);
  if (target == "oracle") return check_oracle(n, grid_res);
  if (target == "euler") return check_euler(param, samples, seed);
  if (target == "quintic") return check_quintic_sides(samples, seed);
  if (target == "p2rr") return check_p2rr(samples, seed);
  if (target == "ig") return check_ig(samples, seed);
  if (target == "cevian") return check_cevian(samples, seed);
  throw Usage("unknown verify target '" + target + "'");
}

lambdan::VerificationReport single_point_report(const std::string& target,
                                                int n, double param,
                                                const std::vector<double>& pt) {
  using namespace lambdan;
  VerificationReport rep;
  rep.inequality_id = target;
  rep.n = n;
  rep.parameter = param;
  rep.samples_tested = 1;

  auto simplex_margin = [&](auto&& margin_fn) {
    const SimplexPoint p = make_point(pt);
    rep.n = p.n();
    rep.min_margin = margin_fn(p);
    rep.witness_kind = "simplex";
    rep.witness = p.coords;
  };
  auto triangle_margin = [&](auto&& margin_fn) {
    if (pt.size() != 3) throw Usage("--point needs three side lengths here");
    const Triangle t = make_triangle(pt[0], pt[1], pt[2]);
    rep.min_margin = margin_fn(t);
    rep.witness_kind = "triangle";
    rep.witness = {t.a, t.b, t.c};
  };

  if (target == "ineq1") {
    simplex_margin([&](const SimplexPoint& p) { return ineq1_margin(p.n(), param, p); });
  } else if (target == "ineq4") {
    simplex_margin([&](const SimplexPoint& p) { return ineq4_margin(p.n(), param, p); });
  } else if (target == "ineq5") {
    simplex_margin([&](const SimplexPoint& p) { return ineq5_margin(p.n(), p); });
  } else if (target == "ahg") {
    simplex_margin([&](const SimplexPoint& p) { return ahg_margin(param, p); });
  } else if (target == "sos3" || target == "sosv") {
    if (pt.size() != 3) throw Usage("--point needs three positive values here");
    rep.margin_tol = 1e-10;
    rep.witness_kind = "simplex";
    rep.witness = pt;
    try {
      const SosPair pair = target == "sos3"
                               ? sos_identity_n3(pt[0], pt[1], pt[2])
                               : sos_identity_quintic(param, pt[0], pt[1], pt[2]);
      rep.min_margin = -std::abs(pair.lhs - pair.rhs) /
                       std::max(1.0, std::abs(pair.lhs));
    } catch (const Error&) {
      rep.min_margin = -1.0;
    }
  } else if (target == "lowerform") {
    if (pt.size() != 1) throw Usage("--point needs a single s in (0,1) here");
    const double scale =
        std::max(1.0, static_cast<double>(n) * n * n / (n - 1));
    rep.min_margin = check_lower_bound_form(n, pt[0]) / scale;
    rep.witness_kind = "scalar";
    rep.witness = pt;
  } else if (target == "euler") {
    triangle_margin([&](const Triangle& t) { return euler_refined_margin(t, param); });
  } else if (target == "quintic") {
    triangle_margin([&](const Triangle& t) { return quintic_sides_margin(t); });
  } else if (target == "p2rr") {
    triangle_margin([&](const Triangle& t) { return p2_16Rr_margin(t); });
  } else if (target == "ig") {
    rep.margin_tol = 1e-12;
    triangle_margin([](const Triangle& t) {
      const double p = 0.5 * (t.a + t.b + t.c);
      return -ig_identity_residual(t) / std::max(1.0, p * p);
    });
  } else if (target == "cevian") {
    if (pt.size() != 6) {
      throw Usage("--point needs a,b,c,w1,w2,w3 for the cevian target");
    }
    const Triangle t = make_triangle(pt[0], pt[1], pt[2]);
    rep.min_margin = cevian_margin(cevian_areas(t, pt[3], pt[4], pt[5]));
    rep.witness_kind = "triangle+weights";
    rep.witness = pt;
  } else if (target == "oracle") {
    throw Usage("the oracle target has no --point replay");
  } else {
    throw Usage("unknown verify target '" + target + "'");
  }

  rep.verdict = rep.min_margin < -rep.margin_tol ? Verdict::VIOLATED
                                                 : Verdict::HOLDS;
  return rep;
}

int run_verify(const std::string& target, int n, bool have_param, double param,
               long samples, std::uint64_t seed, int grid_res,
               const std::vector<double>& point, OutputFormat fmt, int digits,
               const std::string& out) {
  if (!have_param && needs_param(target)) param = default_param(target, n);
  const lambdan::VerificationReport rep =
      point.empty() ? run_campaign(target, n, param, samples, seed, grid_res)
                    : single_point_report(target, n, param, point);
  const int rc = emit(
      lambdan::cli::render_table(kReportHeader, {report_row(rep)}, fmt, digits),
      out);
  if (rc != kExitOk) return rc;
  return rep.verdict == lambdan::Verdict::HOLDS ? kExitOk : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lambdan: sharp constants, bounds and verification campaigns for the "
      "reciprocal-sum/product inequality family on the unit simplex"};
  app.require_subcommand(1);

  std::string format = "csv";
  int digits = 15;
  std::string out_path;
  double tol = 1e-14;

  auto add_output_opts = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: csv|json|markdown")
        ->default_str("csv");
    cmd->add_option("--digits", digits, "Significant digits for csv/markdown")
        ->default_val(15);
    cmd->add_option("--out", out_path, "Write output to a file instead of stdout");
  };

  int n = 3;
  auto* lambda_cmd =
      app.add_subcommand("lambda", "Best constant lambda_n with bounds");
  lambda_cmd->add_option("--n", n, "Order n (>= 3)")->required();
  lambda_cmd->add_option("--tol", tol, "Bracket tolerance for t_n")
      ->default_val(1e-14);
  add_output_opts(lambda_cmd);

  int from = 3, to = 6;
  auto* table_cmd =
      app.add_subcommand("table", "lambda_n table over a range of n");
  table_cmd->add_option("--from", from, "First n (>= 3)")->required();
  table_cmd->add_option("--to", to, "Last n (<= 10000)")->required();
  table_cmd->add_option("--tol", tol, "Bracket tolerance for t_n")
      ->default_val(1e-14);
  add_output_opts(table_cmd);

  long scan_points = 1000;
  auto* scan_cmd = app.add_subcommand(
      "scan", "Emit (t, p_n(t), g_reduced(n,t)) on a uniform grid of (0,1]");
  scan_cmd->add_option("--n", n, "Order n (>= 3)")->required();
  scan_cmd->add_option("--points", scan_points, "Grid size (>= 10)")
      ->default_val(1000);
  add_output_opts(scan_cmd);

  std::string target;
  double param = 0.0;
  long samples = 10000;
  std::uint64_t seed = 0;
  int grid_res = 120;
  std::vector<double> point;
  auto* verify_cmd = app.add_subcommand(
      "verify",
      "Run a verification campaign; exit 0 HOLDS, 1 VIOLATED (a finding), 2 "
      "usage error");
  verify_cmd
      ->add_option("target", target,
                   "ineq1|ineq4|ineq5|ahg|sos3|sosv|lowerform|oracle|euler|"
                   "quintic|p2rr|ig|cevian")
      ->required();
  verify_cmd->add_option("--n", n, "Order n")->default_val(3);
  auto* param_opt = verify_cmd->add_option(
      "--param", param,
      "lambda / nu / l / mu / v as applicable (default: the documented sharp "
      "value)");
  verify_cmd->add_option("--samples", samples, "Random samples")
      ->default_val(10000);
  verify_cmd->add_option("--seed", seed, "Sampling seed")->default_val(0);
  verify_cmd->add_option("--grid-res", grid_res, "Oracle grid resolution")
      ->default_val(120);
  verify_cmd
      ->add_option("--point", point,
                   "Replay a single point (comma-separated coordinates)")
      ->delimiter(',');
  add_output_opts(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const OutputFormat fmt = lambdan::cli::parse_format(format);
    if (app.got_subcommand(lambda_cmd)) {
      return run_lambda(n, tol, fmt, digits, out_path);
    }
    if (app.got_subcommand(table_cmd)) {
      return run_table(from, to, tol, fmt, digits, out_path);
    }
    if (app.got_subcommand(scan_cmd)) {
      return run_scan(n, scan_points, fmt, digits, out_path);
    }
    return run_verify(target, n, param_opt->count() > 0, param, samples, seed,
                      grid_res, point, fmt, digits, out_path);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lambdan::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
