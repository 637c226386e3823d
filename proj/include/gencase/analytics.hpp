#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "gencase/bigint.hpp"
#include "gencase/word.hpp"

namespace gencase {

using WordPredicate = std::function<bool(const Word&)>;

enum class DensityScope { Ball, Slice };

struct DensityEstimate {
  std::size_t n = 0;
  DensityScope scope = DensityScope::Ball;
  double value = 0;
  bool exact = false;
  // exact mode
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;
  // Monte Carlo mode: Wilson 99% half-width
  double ci_half = 0;
  std::uint64_t samples = 0;
};

/// Exact |S ∩ B_n| / |B_n| by enumeration (or the length-n slice fraction
/// when scope is Slice). Throws EnumerationBudgetError past the budget.
DensityEstimate density_exact(const WordPredicate& predicate,
                              const Alphabet& alphabet, Universe universe,
                              std::size_t n,
                              DensityScope scope = DensityScope::Ball,
                              std::uint64_t budget = 1u << 26);

/// Stratified Monte Carlo estimate: samples split per length with exact
/// slice weights (Ball scope) or all spent at length n (Slice scope).
DensityEstimate density_mc(const WordPredicate& predicate,
                           const Alphabet& alphabet, Universe universe,
                           std::size_t n, std::uint64_t samples,
                           std::uint64_t seed,
                           DensityScope scope = DensityScope::Ball);

/// Least squares for a_n ~ C sigma^n on the log scale, over the strictly
/// positive residuals. `exponential` flags a fit good enough (R^2 >= 0.9)
/// to call the decay exponential.
struct ExpFit {
  double sigma_hat = 0;
  double c_hat = 0;
  double r_squared = 0;
  std::size_t points_used = 0;
  bool exponential = false;
};

/// Input: (n, a_n) pairs with a_n the residual 1 - rho_n (or any decaying
/// sequence). Throws when fewer than 3 positive residuals remain.
ExpFit exp_fit(const std::vector<std::pair<double, double>>& residuals);

/// Number of words of length n over X = {a,b}^{+-} that represent 1 in
/// F(a,b); 0 for odd n. Transfer DP over the reduced-length chain.
BigInt cogrowth_count(std::size_t n);

/// p_{2t} for the distance-from-root chain of a d-regular tree, t = 0..n:
/// from 0 to 1 with probability 1, from m > 0 down 1/d and up (d-1)/d.
std::vector<Rational> return_probability_dp(std::size_t degree, std::size_t n);

}  // namespace gencase
