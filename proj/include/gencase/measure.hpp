#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gencase/rng.hpp"
#include "gencase/word.hpp"

namespace gencase {

enum class DistKind { Cauchy, Geometric, UniformRange, PointMass };

/// Length distribution d(0..n_max), normalized to sum 1 over the truncation.
/// Cauchy is the n^-2 weight with d(0) = 0; the mass dropped by truncating
/// the infinite series is reported, not hidden.
class LengthDistribution {
 public:
  static LengthDistribution cauchy(std::size_t n_max = kDefaultNMax);
  static LengthDistribution geometric(double ratio, std::size_t n_max = kDefaultNMax);
  static LengthDistribution uniform_range(std::size_t a, std::size_t b);
  static LengthDistribution point_mass(std::size_t n);

  static constexpr std::size_t kDefaultNMax = 4096;

  DistKind kind() const { return kind_; }
  std::size_t n_max() const { return table_.size() - 1; }
  double d(std::size_t n) const { return n < table_.size() ? table_[n] : 0.0; }
  const std::vector<double>& table() const { return table_; }
  /// Fraction of the untruncated series mass lost to truncation.
  double truncation_error() const { return truncation_error_; }

  /// Same kind and parameters, rebuilt at a different truncation.
  LengthDistribution truncated(std::size_t new_n_max) const;

  std::size_t sample_length(Rng& rng) const;

  std::string spec() const;

 private:
  LengthDistribution() = default;
  void finish_table(double untruncated_total);

  DistKind kind_;
  double param_a_ = 0, param_b_ = 0;
  std::vector<double> table_;
  std::vector<double> cdf_;
  double truncation_error_ = 0;
};

/// Length-invariant measure: d(n) spread uniformly over the length-n slice
/// of the chosen universe.
class LengthInvariantMeasure {
 public:
  LengthInvariantMeasure(Alphabet alphabet, Universe universe,
                         LengthDistribution dist)
      : alphabet_(std::move(alphabet)),
        universe_(universe),
        dist_(std::move(dist)) {}

  const Alphabet& alphabet() const { return alphabet_; }
  Universe universe() const { return universe_; }
  const LengthDistribution& distribution() const { return dist_; }

  /// Point mass of one word: d(|w|) / slice_count(|w|). Throws when the
  /// universe is ReducedWords and w is not freely reduced.
  double mass(const Word& w) const;

  Word sample(Rng& rng) const;

 private:
  Alphabet alphabet_;
  Universe universe_;
  LengthDistribution dist_;
};

/// Spec strings: "cauchy", "geom:0.9", "uniform:1:256", "point:128",
/// optional "@reduced" suffix selecting the reduced-word universe.
LengthInvariantMeasure parse_measure_spec(const Alphabet& alphabet,
                                          const std::string& spec,
                                          std::size_t n_max = LengthDistribution::kDefaultNMax);

}  // namespace gencase
