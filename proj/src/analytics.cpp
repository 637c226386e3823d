#include "gencase/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gencase/rng.hpp"

namespace gencase {

namespace {

constexpr double kZ99 = 2.5758293035489004;

double wilson_half(double p_hat, double n) {
  if (n <= 0) return 0;
  double z2 = kZ99 * kZ99;
  double denom = 1.0 + z2 / n;
  double rad = p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n);
  return kZ99 * std::sqrt(rad) / denom;
}

}  // namespace

DensityEstimate density_exact(const WordPredicate& predicate,
                              const Alphabet& alphabet, Universe universe,
                              std::size_t n, DensityScope scope,
                              std::uint64_t budget) {
  DensityEstimate est;
  est.n = n;
  est.scope = scope;
  est.exact = true;
  std::size_t m_lo = scope == DensityScope::Ball ? 0 : n;
  std::uint64_t hits = 0, total = 0;
  for (std::size_t m = m_lo; m <= n; ++m) {
    enumerate_words(alphabet, universe, m, budget, [&](const Word& w) {
      ++total;
      if (predicate(w)) ++hits;
    });
  }
  est.numerator = hits;
  est.denominator = total;
  est.value = total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
  return est;
}

DensityEstimate density_mc(const WordPredicate& predicate,
                           const Alphabet& alphabet, Universe universe,
                           std::size_t n, std::uint64_t samples,
                           std::uint64_t seed, DensityScope scope) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  DensityEstimate est;
  est.n = n;
  est.scope = scope;
  est.exact = false;
  est.samples = samples;
  Rng rng(seed);
  if (scope == DensityScope::Slice) {
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
      if (predicate(sample_word(alphabet, universe, n, rng))) ++hits;
    }
    double p = static_cast<double>(hits) / static_cast<double>(samples);
    est.value = p;
    est.ci_half = wilson_half(p, static_cast<double>(samples));
    return est;
  }
  // Ball scope: per-length strata weighted by exact slice sizes.
  BigInt ball = ball_count(alphabet, universe, n);
  double ball_d = ball.to_double();
  std::uint64_t per = std::max<std::uint64_t>(samples / (n + 1), 1);
  double value = 0, ci = 0;
  for (std::size_t m = 0; m <= n; ++m) {
    double weight = slice_count(alphabet, universe, m).to_double() / ball_d;
    std::uint64_t hits = 0;
    if (m == 0) {
      hits = predicate(Word()) ? per : 0;
    } else {
      for (std::uint64_t s = 0; s < per; ++s) {
        if (predicate(sample_word(alphabet, universe, m, rng))) ++hits;
      }
    }
    double p = static_cast<double>(hits) / static_cast<double>(per);
    value += weight * p;
    ci += weight * (m == 0 ? 0.0 : wilson_half(p, static_cast<double>(per)));
  }
  est.value = value;
  est.ci_half = ci;
  est.samples = per * (n + 1);
  return est;
}

ExpFit exp_fit(const std::vector<std::pair<double, double>>& residuals) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [n, a] : residuals) {
    if (a > 0) pts.push_back({n, std::log(a)});
  }
  if (pts.size() < 3)
    throw std::invalid_argument("exp_fit needs at least 3 positive residuals");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double m = static_cast<double>(pts.size());
  double denom = m * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("degenerate abscissae in exp_fit");
  double slope = (m * sxy - sx * sy) / denom;
  double intercept = (sy - slope * sx) / m;
  double ss_res = 0, ss_tot = 0, mean_y = sy / m;
  for (const auto& [x, y] : pts) {
    double fit = slope * x + intercept;
    ss_res += (y - fit) * (y - fit);
    ss_tot += (y - mean_y) * (y - mean_y);
  }
  ExpFit f;
  f.sigma_hat = std::exp(slope);
  f.c_hat = std::exp(intercept);
  f.r_squared = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
  f.points_used = pts.size();
  f.exponential = f.r_squared >= 0.9;
  return f;
}

BigInt cogrowth_count(std::size_t n) {
  if (n % 2 == 1) return BigInt();
  // c[m] = words of this length whose reduction has length m; k = 4
  const std::uint64_t k = 4;
  std::vector<BigInt> cur(n + 2), nxt(n + 2);
  cur[0] = BigInt(1);
  for (std::size_t step = 0; step < n; ++step) {
    for (auto& cell : nxt) cell = BigInt();
    for (std::size_t m = 0; m <= step; ++m) {
      if (cur[m].is_zero()) continue;
      if (m == 0) {
        BigInt out = cur[0];
        out.mul_small(k);
        nxt[1] += out;
      } else {
        nxt[m - 1] += cur[m];
        BigInt out = cur[m];
        out.mul_small(k - 1);
        nxt[m + 1] += out;
      }
    }
    std::swap(cur, nxt);
  }
  return cur[0];
}

std::vector<Rational> return_probability_dp(std::size_t degree, std::size_t n) {
  if (degree < 2) throw std::invalid_argument("degree must be >= 2");
  std::vector<Rational> out;
  out.push_back(Rational{BigInt(1), BigInt(1)});
  std::size_t steps = 2 * n;
  std::vector<BigInt> cur(steps + 2), nxt(steps + 2);
  cur[0] = BigInt(1);
  for (std::size_t t = 1; t <= steps; ++t) {
    for (auto& cell : nxt) cell = BigInt();
    for (std::size_t m = 0; m < t; ++m) {
      if (cur[m].is_zero()) continue;
      if (m == 0) {
        BigInt up = cur[0];
        up.mul_small(degree);
        nxt[1] += up;
      } else {
        nxt[m - 1] += cur[m];
        BigInt up = cur[m];
        up.mul_small(degree - 1);
        nxt[m + 1] += up;
      }
    }
    std::swap(cur, nxt);
    if (t % 2 == 0) out.push_back(Rational{cur[0], BigInt::pow(degree, t)});
  }
  return out;
}

}  // namespace gencase
