#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "gencase/word.hpp"

namespace gencase {

enum class Answer { InLanguage, NotInLanguage };

enum class StepStatus { Running, Decided, UndecidedFinal };

/// Outcome of a finished machine: how it ended and the exact unit-step
/// count T. T >= 1 for every run, including the empty word.
struct RunRecord {
  StepStatus status = StepStatus::Decided;  // Decided or UndecidedFinal
  Answer answer = Answer::NotInLanguage;    // meaningful when Decided
  std::uint64_t steps = 1;                  // T

  bool decided() const { return status == StepStatus::Decided; }
};

struct StepCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Resumable decision computation over one input word.
///
/// Machines here are deterministic unit-cost counters: the decision and its
/// step count are fixed at construction from the input word and the
/// module-documented cost model, and step() advances the accounting one unit
/// at a time. This replaces wall-clock or Turing-machine time with a
/// reproducible T(w) while keeping the run/combine semantics stepwise.
class StepMachine {
 public:
  struct ParallelOutcome {
    RunRecord total;
    RunRecord partial;
  };

  explicit StepMachine(RunRecord final_record)
      : final_(final_record), remaining_(final_record.steps) {
    if (final_.steps == 0) {
      final_.steps = 1;
      remaining_ = 1;
    }
  }
  virtual ~StepMachine() = default;

  StepStatus status() const {
    return remaining_ > 0 ? StepStatus::Running : final_.status;
  }
  Answer answer() const {
    if (status() != StepStatus::Decided)
      throw std::logic_error("machine has not decided");
    return final_.answer;
  }
  /// Advances one accounted unit; no-op once finished.
  void step() {
    if (remaining_ > 0) --remaining_;
  }
  std::uint64_t steps_taken() const { return final_.steps - remaining_; }

  /// The record this machine will report once fully stepped.
  const RunRecord& final_record() const { return final_; }

  /// Inner records when this machine is a parallel combination.
  virtual const ParallelOutcome* parallel_outcome() const { return nullptr; }

 private:
  RunRecord final_;
  std::uint64_t remaining_;
};

/// A named machine factory. `total` factories always decide; partial ones
/// may end UndecidedFinal but any decision they reach is correct.
struct Solver {
  std::string name;
  bool total = true;
  std::function<std::unique_ptr<StepMachine>(const Word&)> make;
};

inline constexpr std::uint64_t kDefaultStepCap = 1000000000ull;

/// Steps the machine until it finishes; throws StepCapExceeded rather than
/// ever reporting a wrong or truncated answer.
RunRecord drive(StepMachine& machine, std::uint64_t step_cap = kDefaultStepCap);
RunRecord run(const Solver& solver, const Word& w,
              std::uint64_t step_cap = kDefaultStepCap);

/// Declared worst-case cost shapes. Evaluation is non-decreasing and >= 1
/// so normalized ratios stay defined at n = 0.
class ComplexityBound {
 public:
  static ComplexityBound linear(double c = 1.0);
  static ComplexityBound quadratic(double c = 1.0);
  /// c * 2^ceil(sqrt(n))
  static ComplexityBound subexp_root(double c = 1.0);
  static ComplexityBound custom(std::vector<std::uint64_t> table);

  std::uint64_t eval(std::size_t n) const;
  double evald(std::size_t n) const { return static_cast<double>(eval(n)); }
  const std::string& spec() const { return spec_; }

 private:
  std::function<std::uint64_t(std::size_t)> f_;
  std::string spec_;
};

/// "lin", "lin:2", "quad", "quad:0.5", "subexp", "subexp:3"
ComplexityBound parse_bound_spec(const std::string& spec);

/// Letter-image table of a map between free bases; inverse letters go to the
/// formal inverses of the images.
struct Homomorphism {
  Alphabet source;
  Alphabet target;
  std::vector<Word> images;  // one per source generator, over target
};

/// Applies letter by letter and freely reduces the result.
Word apply_homomorphism(const Homomorphism& h, const Word& w);

/// Total word-problem solver for the free group on the alphabet.
/// Cost model: T = max(1, |w|), one unit per input letter.
Solver free_group_solver(const Alphabet& alphabet);

/// Total word-problem solver for the free abelian group on the alphabet
/// (per-generator exponent sums). Cost model: T = max(1, |w|).
Solver free_abelian_solver(const Alphabet& alphabet);

/// Partial solver that certifies w != 1 whenever the image under `h` is
/// nontrivial in the target (decided by `target_total`). Never answers
/// InLanguage. Cost model: max(1, |w|) substitution units plus the target
/// machine's steps on the image.
Solver quotient_filter(const Homomorphism& h, const Solver& target_total);

/// Deterministic round-robin interleaving, partial machine stepping first;
/// the first decision wins, and after the partial ends UndecidedFinal every
/// remaining step goes to the total machine. Satisfies
///   T <= 2 min(T_total, T_partial) + 2   when the partial decides,
///   T <= T_total + T_partial + 2         otherwise.
Solver parallel_combine(const Solver& total, const Solver& partial);

/// Same answers as `inner`, but consuming exactly max(bound(|w|), T_inner)
/// steps: a solver running at its declared worst-case bound.
Solver with_forced_cost(const Solver& inner, const ComplexityBound& bound);

/// Test/benchmark helper: outcome scripted per word, steps clamped to >= 1.
Solver scripted_solver(std::string name, bool total,
                       std::function<RunRecord(const Word&)> script);

/// Word problem of G x F(a,b) over the disjoint union of generators.
struct ProductPipeline {
  Alphabet alphabet;       // G generators followed by the free pair
  Alphabet free_alphabet;  // {a, b}
  Homomorphism to_free;    // kill G letters, keep the free pair
  Solver total;            // both projections trivial
  Solver filter;           // quotient filter along the free projection
  Solver combined;
};

/// `g_solver` must solve the word problem of G over `g_alphabet`. The free
/// pair is named "a", "b"; G generator names must not clash with those.
ProductPipeline product_pipeline(const Solver& g_solver, const Alphabet& g_alphabet);

}  // namespace gencase
