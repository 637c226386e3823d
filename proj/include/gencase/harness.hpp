#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gencase/analytics.hpp"
#include "gencase/measure.hpp"
#include "gencase/pipeline.hpp"
#include "gencase/solver.hpp"

namespace gencase {

enum class MachineSel { Combined, TotalOnly, FilterOnly };

struct ProfileConfig {
  std::vector<std::size_t> lengths;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  std::optional<ComplexityBound> f1;             // default: per pipeline/machine
  MachineSel machine = MachineSel::Combined;
  std::optional<ComplexityBound> forced_total;   // wrap the total solver
  Universe universe = Universe::AllWords;
  std::uint64_t enum_cutoff = 1u << 16;          // exact rows up to this slice size
  std::uint64_t step_cap = kDefaultStepCap;
  bool prefer_exact = true;
};

struct ResultRow {
  std::size_t n = 0;
  std::uint64_t samples = 0;
  bool exact = false;
  double mean_t = 0;
  double ci_half = 0;        // 99% on the mean; 0 for exact rows
  std::uint64_t max_t = 0;
  double undecided_frac = 0; // filter ended UndecidedFinal
  double ratio = 0;          // mean_t / f1(n)
  double f1_value = 1;
  double se = 0;             // standard error of mean_t
  std::uint64_t cap_failures = 0;
};

struct ResultTable {
  std::vector<ResultRow> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::string f1_spec;
  std::uint64_t contract_violations = 0;
};

/// The machine the config selects from a pipeline (with the optional forced
/// worst-case wrapper applied to the total solver).
Solver configured_solver(const Pipeline& pipeline, MachineSel machine,
                         const std::optional<ComplexityBound>& forced_total);
const ComplexityBound& default_bound(const Pipeline& pipeline, MachineSel machine);

/// Per-length profile of mean/max step counts, undecided fractions and
/// normalized ratios. Rows with a slice not larger than the cutoff are
/// exact enumerations; the rest use per-row seeded uniform sampling. Every
/// combined run is checked against the interleaving step contract.
ResultTable avg_time_profile(const Pipeline& pipeline, const ProfileConfig& config);

/// sup over measured n of E_n[T]/f1(n); by length-invariance this one
/// number bounds sum_n d(n) E_n[T]/f1(n) for every length distribution d
/// supported on the measured lengths.
double uniform_bound_metric(const ResultTable& table);

struct WeightedSum {
  double value = 0;
  double ci_half = 0;
  double covered_mass = 0;  // total d(n) weight sitting on table rows
};

/// sum over table rows of d(n) * mean_T(n)/f1(n).
WeightedSum family_weighted_sum(const ResultTable& table,
                                const LengthDistribution& dist);

struct IntegralReport {
  double value = 0;
  double ci_half = 0;
  double value_half = 0;     // recomputed at truncation N/2
  double growth = 0;         // value/value_half - 1
  bool divergence_flag = false;
  std::uint64_t tail_samples = 0;
  std::size_t truncation = 0;
  std::size_t exact_head = 0;  // lengths <= this were enumerated exactly
};

/// Monte Carlo estimate of sum_w T(w)/f1(|w|) mu(w) with an exact head over
/// the enumerable lengths. The divergence heuristic compares truncations
/// N/2 and N; relative growth above `divergence_threshold` raises the flag.
IntegralReport integral_estimate(const Alphabet& alphabet, const Solver& solver,
                                 const LengthDistribution& dist,
                                 const ComplexityBound& f1,
                                 std::uint64_t samples, std::uint64_t seed,
                                 Universe universe = Universe::AllWords,
                                 std::uint64_t enum_cutoff = 1u << 16,
                                 std::uint64_t step_cap = kDefaultStepCap,
                                 double divergence_threshold = 0.10);

struct CauchyCheckPoint {
  std::size_t n;
  double partial_sum;
};

struct CauchyCheckReport {
  std::vector<CauchyCheckPoint> checkpoints;  // powers of two and N
  double sum_at_half = 0;
  double sum_at_full = 0;
  double increment_ratio = 0;  // sum_at_full/sum_at_half - 1
  double degree_m = 0;
  double epsilon = 0;
};

/// Partial sums of sum_n (6/pi^2) n^-2 E_n[T] / n^(m-1+eps) up to N, with
/// fixed series weights so the sums are monotone in N.
CauchyCheckReport cauchy_average_check(const Alphabet& alphabet,
                                       const Solver& solver, double degree_m,
                                       double epsilon, std::size_t n_limit,
                                       std::uint64_t samples_per_length,
                                       std::uint64_t seed,
                                       Universe universe = Universe::AllWords,
                                       std::uint64_t enum_cutoff = 1u << 16,
                                       std::uint64_t step_cap = kDefaultStepCap);

struct GenericDecayRow {
  std::size_t n = 0;
  std::uint64_t samples = 0;
  bool exact = false;
  double undecided = 0;
};

struct GenericDecayReport {
  std::vector<GenericDecayRow> rows;
  std::optional<ExpFit> fit;  // over strictly positive undecided fractions
};

/// Undecided-input fraction of a partial solver per length, plus the
/// exponential-decay fit of those fractions.
GenericDecayReport generic_density_experiment(const Alphabet& alphabet,
                                              const Solver& filter,
                                              const std::vector<std::size_t>& lengths,
                                              std::uint64_t samples,
                                              std::uint64_t seed,
                                              Universe universe = Universe::AllWords,
                                              std::uint64_t enum_cutoff = 1u << 16,
                                              std::uint64_t step_cap = kDefaultStepCap);

// Fixed CSV columns: n,samples,mean_T,ci_half,max_T,undecided_frac,ratio.
std::string to_csv(const ResultTable& table);
std::string to_json(const ResultTable& table);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gencase
