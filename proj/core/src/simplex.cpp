#include "lambdan/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "lambdan/best_constant.hpp"

namespace lambdan {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

// splitmix64 stream keyed by (seed, index); values of sample `index`
// never depend on other samples.
struct StreamRng {
  std::uint64_t state;

  StreamRng(std::uint64_t seed, std::uint64_t index)
      : state(mix64(seed ^ mix64(index + kGolden))) {}

  std::uint64_t next_u64() {
    state += kGolden;
    return mix64(state);
  }

  // Strictly inside (0,1).
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }
};

long double ipow_ld(long double base, int e) {
  long double acc = 1.0L;
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

bool SimplexPoint::is_centroid() const {
  return detail::near_centroid(coords);
}

SimplexPoint make_point(std::vector<double> coords) {
  const int n = static_cast<int>(coords.size());
  if (n < 2) throw BadOrder("make_point: need at least 2 coordinates");
  double sum = 0.0;
  for (double c : coords) {
    if (!std::isfinite(c)) throw NonFinite("make_point: coordinate is not finite");
    if (!(c > 0.0)) throw NotInterior("make_point: coordinates must be > 0");
    sum += c;
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw BadSum("make_point: coordinates must sum to 1 within 1e-6");
  }
  for (double& c : coords) {
    c /= sum;
    if (c < kMinCoordinate) {
      throw NotInterior("make_point: coordinate below the interior threshold");
    }
  }
  return SimplexPoint{std::move(coords)};
}

SimplexPoint sample_point(int n, std::uint64_t seed, std::uint64_t index) {
  if (n < 2) throw BadOrder("sample_point: n must be >= 2");
  StreamRng rng(seed, index);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (;;) {
    double sum = 0.0;
    for (double& v : x) {
      v = -std::log(rng.next_unit());
      sum += v;
    }
    for (double& v : x) v /= sum;
    // Redraw the (vanishingly rare) samples that would hug the boundary.
    if (*std::min_element(x.begin(), x.end()) >= kMinCoordinate) break;
  }
  return SimplexPoint{std::move(x)};
}

std::vector<SimplexPoint> sample_random(int n, long count, std::uint64_t seed) {
  if (count < 1) throw OutOfRange("sample_random: count must be >= 1");
  std::vector<SimplexPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    out.push_back(sample_point(n, seed, static_cast<std::uint64_t>(i)));
  }
  return out;
}

std::vector<SimplexPoint> grid_points(int n, int m) {
  std::vector<SimplexPoint> out;
  for_each_grid_point(n, m, [&](std::span<const double> x) {
    out.push_back(SimplexPoint{std::vector<double>(x.begin(), x.end())});
  });
  return out;
}

namespace detail {

bool near_centroid(std::span<const double> coords) {
  const double inv_n = 1.0 / static_cast<double>(coords.size());
  for (double c : coords) {
    if (std::abs(c - inv_n) > kCentroidEps) return false;
  }
  return true;
}

long double scaled_product(std::span<const double> coords) {
  const auto n = static_cast<long double>(coords.size());
  if (coords.size() <= 64) {
    long double prod = 1.0L;
    for (double c : coords) prod *= n * c;
    return prod;
  }
  long double logsum = 0.0L;
  for (double c : coords) logsum += std::log(n * static_cast<long double>(c));
  return std::exp(logsum);
}

double eval_g_on(std::span<const double> xs) {
  const auto n = static_cast<long double>(xs.size());
  // Evaluate at the exact unit-sum projection x / sum(x).  The stored
  // doubles carry an off-simplex rounding component of ~1e-16 which the
  // quadratically vanishing numerator and denominator would amplify by
  // orders of magnitude near the centroid.
  long double sum = 0.0L;
  for (double x : xs) sum += static_cast<long double>(x);
  long double max_abs_v = 0.0L;
  for (double x : xs) {
    const long double v = (n * static_cast<long double>(x) - sum) / sum;
    max_abs_v = std::max(max_abs_v, std::abs(v));
  }

  long double num;  // n^2 (1 - n^n prod x)
  long double den;  // n^2 / sum(1/x) - n^n prod x
  if (max_abs_v < 0.5L) {
    // Near the centroid both quantities cancel quadratically, so track the
    // deviations from 1 directly: with v_i = n x_i - 1,
    //   q      = prod(1+v_i) - 1,
    //   n - T  = sum v_i/(1+v_i)  for  T = sum 1/(1+v_i) = sum(1/x_i)/n,
    // and den = (n - T)/T - q exactly.
    long double q = 0.0L;
    long double t_sum = 0.0L;
    long double n_minus_t = 0.0L;
    for (double x : xs) {
      const long double v = (n * static_cast<long double>(x) - sum) / sum;
      q += v + q * v;
      const long double r = 1.0L / (1.0L + v);
      t_sum += r;
      n_minus_t += v * r;
    }
    num = -n * n * q;
    den = n_minus_t / t_sum - q;
  } else if (xs.size() <= 64) {
    long double recip_sum = 0.0L;
    long double prod = 1.0L;
    for (double x : xs) {
      recip_sum += 1.0L / static_cast<long double>(x);
      prod *= n * static_cast<long double>(x) / sum;
    }
    recip_sum *= sum;
    num = n * n * (1.0L - prod);
    den = n * n / recip_sum - prod;
  } else {
    long double recip_sum = 0.0L;
    long double logsum = 0.0L;
    for (double x : xs) {
      recip_sum += 1.0L / static_cast<long double>(x);
      logsum += std::log(n * static_cast<long double>(x) / sum);
    }
    recip_sum *= sum;
    const long double prod = std::exp(logsum);
    num = n * n * (1.0L - prod);
    den = n * n / recip_sum - prod;
  }
  if (!(den > 0.0L)) {
    throw NonPositiveDenominator("eval_g: denominator must stay positive on the open simplex");
  }
  return static_cast<double>(num / den);
}

}  // namespace detail

double eval_g(const SimplexPoint& p) {
  if (p.n() < 3) throw BadOrder("eval_g: defined for n >= 3");
  if (p.is_centroid()) {
    throw AtCentroid("eval_g: inside the centroid ball; the limit value is n^3/(n-2)");
  }
  return detail::eval_g_on(p.coords);
}

double eval_g_reduced(int n, double t) {
  if (n < 3) throw BadOrder("eval_g_reduced: n must be >= 3");
  if (!(t > 0.0) || !(t <= 1.0)) {
    throw OutOfRange("eval_g_reduced: t must lie in (0, 1]");
  }
  return lambda_from_t(n, t);
}

SimplexPoint reduced_family_point(int n, double t) {
  if (n < 3) throw BadOrder("reduced_family_point: n must be >= 3");
  if (!(t > 0.0) || !(t <= 1.0)) {
    throw OutOfRange("reduced_family_point: t must lie in (0, 1]");
  }
  const double x = t / n;
  std::vector<double> coords(static_cast<std::size_t>(n), x);
  coords.back() = 1.0 - (n - 1) * x;
  return SimplexPoint{std::move(coords)};
}

double consistency_reduced_vs_full(int n, double t) {
  if (!(t > 0.0) || !(t < 1.0)) {
    throw OutOfRange("consistency_reduced_vs_full: t must lie in (0, 1)");
  }
  const SimplexPoint p = reduced_family_point(n, t);
  return std::abs(eval_g(p) - eval_g_reduced(n, t));
}

double lemma1_ratio(int n, double x, std::span<const double> gammas, double t) {
  if (n < 2 || static_cast<int>(gammas.size()) != n) {
    throw BadOrder("lemma1_ratio: need n >= 2 gammas");
  }
  if (!(x > 0.0)) throw NotPositive("lemma1_ratio: x must be > 0");
  if (t == 0.0 || !std::isfinite(t)) {
    throw OutOfRange("lemma1_ratio: t must be finite and nonzero");
  }
  bool all_equal = true;
  for (double g : gammas) {
    if (g != gammas[0]) {
      all_equal = false;
      break;
    }
  }
  if (all_equal) {
    throw DegenerateDirection("lemma1_ratio: gammas must not all be equal");
  }

  long double s1 = 0.0L;
  long double recip = 0.0L;
  long double prod = 1.0L;
  for (double g : gammas) {
    const long double xi =
        static_cast<long double>(x) + static_cast<long double>(g) * t;
    if (!(xi > 0.0L)) {
      throw NotPositive("lemma1_ratio: x + gamma*t must stay positive");
    }
    s1 += xi;
    recip += 1.0L / xi;
    prod *= xi;
  }
  const long double num = s1 - static_cast<long double>(n) * n / recip;
  const long double den =
      ipow_ld(s1, n) - ipow_ld(static_cast<long double>(n), n) * prod;
  if (den == 0.0L) {
    throw NonFinite("lemma1_ratio: denominator vanished at floating resolution");
  }
  return static_cast<double>(num / den);
}

}  // namespace lambdan
