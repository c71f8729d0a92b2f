#include <benchmark/benchmark.h>

#include "lambdan/best_constant.hpp"
#include "lambdan/simplex.hpp"
#include "lambdan/triangle.hpp"
#include "lambdan/verify.hpp"

namespace {

void BM_compute_lambda(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambdan::compute_lambda(n));
  }
}
BENCHMARK(BM_compute_lambda)->Arg(3)->Arg(6)->Arg(50)->Arg(200)->Arg(1000);

void BM_eval_g(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pts = lambdan::sample_random(n, 256, 7);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambdan::eval_g(pts[i]));
    i = (i + 1) % pts.size();
  }
}
BENCHMARK(BM_eval_g)->Arg(3)->Arg(8)->Arg(64)->Arg(128);

void BM_sample_point(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambdan::sample_point(n, 42, i++));
  }
}
BENCHMARK(BM_sample_point)->Arg(3)->Arg(8);

void BM_brute_force_min_g(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambdan::brute_force_min_g(3, m));
  }
}
BENCHMARK(BM_brute_force_min_g)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_cevian_areas(benchmark::State& state) {
  const lambdan::Triangle t = lambdan::make_triangle(3, 4, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambdan::cevian_areas(t, 0.6, 0.3, 0.1));
  }
}
BENCHMARK(BM_cevian_areas);

void BM_check_ineq1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double lambda = lambdan::compute_lambda(n).lambda_n;
  const auto pts = lambdan::sample_random(n, 1000, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambdan::check_ineq1(n, lambda, pts, true));
  }
}
BENCHMARK(BM_check_ineq1)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
