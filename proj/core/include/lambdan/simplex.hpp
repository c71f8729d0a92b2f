#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lambdan/errors.hpp"

namespace lambdan {

/// Max-norm radius of the ball around the centroid inside which eval_g
/// refuses to evaluate; callers use the limit value n^3/(n-2) there.
inline constexpr double kCentroidEps = 1e-9;

/// Points with a coordinate below this are rejected as effectively on the
/// boundary, where the objective diverges.
inline constexpr double kMinCoordinate = 1e-12;

/// Point of the open unit simplex: n positive coordinates summing to 1.
/// Construct through make_point (validating) or the samplers below.
struct SimplexPoint {
  std::vector<double> coords;

  int n() const { return static_cast<int>(coords.size()); }
  bool is_centroid() const;
};

/// Validates finiteness, positivity (NotInterior) and unit sum within 1e-6
/// (BadSum), then normalizes by the exact coordinate sum.
SimplexPoint make_point(std::vector<double> coords);

/// Sample `index` of the stream keyed by `seed`: n standard-exponential
/// variates normalized by their sum, which is uniform on the simplex.
/// A pure function of (n, seed, index), so any evaluation order or degree
/// of parallelism reproduces the same point.
SimplexPoint sample_point(int n, std::uint64_t seed, std::uint64_t index);

/// The first `count` samples of the stream.
std::vector<SimplexPoint> sample_random(int n, long count, std::uint64_t seed);

/// All lattice points (k_1/m, ..., k_n/m) with integer k_i >= 1 and
/// sum k_i = m, in lexicographic order of (k_1, ..., k_n).
/// Throws ResolutionTooSmall when m < n.
std::vector<SimplexPoint> grid_points(int n, int m);

/// Streaming form of grid_points; visit receives each point's coordinates
/// as a span valid only for the duration of the call.
template <typename Visitor>
void for_each_grid_point(int n, int m, Visitor&& visit);

/// The objective g of the unit-sum inequality,
///
///   g(x) = n^2 (1 - n^n prod x) / (n^2 / sum(1/x) - n^n prod x),
///
/// defined away from the centroid, where both numerator and denominator
/// vanish quadratically (AtCentroid inside the kCentroidEps ball).
/// The denominator is positive on the rest of the open simplex; a
/// non-positive value signals a defect (NonPositiveDenominator).
double eval_g(const SimplexPoint& p);

/// g along the family x_1 = ... = x_{n-1} = t/n, x_n = 1 - (n-1) t/n,
/// i.e. n^2 / (1 - (n-1)/p_n(t)); finite on all of (0,1], with the
/// removable-singularity value n^3/(n-2) at t = 1.
double eval_g_reduced(int n, double t);

/// The point of the reduced family at parameter t in (0,1].
SimplexPoint reduced_family_point(int n, double t);

/// |eval_g(reduced point at t) - eval_g_reduced(n, t)|; the two routes
/// agree to ~1e-9 relative.
double consistency_reduced_vs_full(int n, double t);

/// The ratio (sum x_i - n^2/sum(1/x_i)) / ((sum x_i)^n - n^n prod x_i) at
/// x_i = x + gamma_i t.  As t -> 0 it tends to 2 / (n^n x^{n-1}) for any
/// direction whose gammas are not all equal (DegenerateDirection if they
/// are, NotPositive if a coordinate leaves (0, inf)).
double lemma1_ratio(int n, double x, std::span<const double> gammas, double t);

namespace detail {

/// g on raw coordinates (no centroid refusal, caller checks); used by the
/// grid oracle to avoid one allocation per lattice point.
double eval_g_on(std::span<const double> coords);

bool near_centroid(std::span<const double> coords);

/// prod(n * x_i) = n^n prod(x_i); direct product for n <= 64, log-space
/// accumulation above (plain products would underflow for large n).
long double scaled_product(std::span<const double> coords);

}  // namespace detail

template <typename Visitor>
void for_each_grid_point(int n, int m, Visitor&& visit) {
  if (n < 2) throw BadOrder("for_each_grid_point: n must be >= 2");
  if (m < n) throw ResolutionTooSmall("for_each_grid_point: need m >= n");
  std::vector<int> k(static_cast<std::size_t>(n));
  std::vector<double> x(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      k[static_cast<std::size_t>(pos)] = remaining;
      for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] =
            static_cast<double>(k[static_cast<std::size_t>(i)]) / m;
      }
      visit(std::span<const double>(x));
      return;
    }
    const int tail = n - 1 - pos;  // coordinates still to place, each >= 1
    for (int v = 1; v <= remaining - tail; ++v) {
      k[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, m);
}

}  // namespace lambdan
