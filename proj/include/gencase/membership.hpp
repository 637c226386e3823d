#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gencase/bigint.hpp"
#include "gencase/solver.hpp"
#include "gencase/word.hpp"

namespace gencase {

/// Folded basepointed graph with edges labeled by letters; deterministic in
/// both directions: at most one neighbor per letter code per vertex. The
/// basepoint is vertex 0. Loops at the basepoint spell exactly the subgroup.
class CoreGraph {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  CoreGraph(Alphabet alphabet, std::vector<std::vector<std::size_t>> next);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t vertex_count() const { return next_.size(); }
  std::size_t base() const { return 0; }
  std::size_t next(std::size_t v, std::uint32_t code) const {
    return next_[v][code];
  }
  std::size_t missing_count(std::size_t v) const;

  /// Breadth-first relabeling from the basepoint with letter-order
  /// tie-breaking; equal signatures == isomorphic based labeled graphs.
  std::vector<std::size_t> canonical_signature() const;

 private:
  Alphabet alphabet_;
  std::vector<std::vector<std::size_t>> next_;  // [vertex][letter code]
};

/// Wedge of generator loops at the basepoint, folded to a fixpoint.
/// `fold_order_seed` shuffles the merge order (the folded result is
/// order-independent up to isomorphism); 0 keeps the deterministic order.
CoreGraph stallings_core(const Alphabet& alphabet,
                         const std::vector<Word>& generators,
                         std::uint64_t fold_order_seed = 0);

/// Freely reduces w and traces it from the basepoint; Member iff every
/// letter is readable and the trace ends at the basepoint.
Answer membership_trace(const CoreGraph& core, const Word& w);

struct WalkResult {
  bool ends_at_base = false;
  Answer answer = Answer::NotInLanguage;
};

/// Walks w through the Schreier graph of the subgroup: the core plus lazily
/// materialized hanging trees. No free reduction needed; agrees with
/// membership_trace on every input.
WalkResult schreier_walk(const CoreGraph& core, const Word& w);

/// Total linear-time solvers: trace-based, and walk-based (the filter role;
/// exact for free groups, so it also always decides). T = max(1, |w|).
Solver membership_solver(CoreGraph core);
Solver schreier_walk_solver(CoreGraph core);

/// Subgroup file format: one generator word per line.
std::vector<Word> parse_subgroup(const Alphabet& alphabet, const std::string& text);

struct WalkGraphSpec {
  enum class Kind { FreeCayley, Line, Schreier };
  Kind kind = Kind::FreeCayley;
  std::size_t rank = 2;                 // FreeCayley: 2g-regular tree
  std::optional<CoreGraph> core;        // Schreier

  static WalkGraphSpec free_cayley(std::size_t g);
  static WalkGraphSpec line();
  static WalkGraphSpec schreier(CoreGraph core);
};

/// Return probabilities of the simple random walk at even times up to 2n.
/// tail_ratio = p_{2n}/p_{2n-2} -> rho^2; corrected_ratio removes the
/// leading (n/(n-1))^alpha polynomial factor (alpha = 3/2 for trees and
/// Schreier graphs, 1/2 for the line), rho_hat = sqrt(corrected_ratio).
struct SpectralTable {
  std::vector<Rational> p_even;       // exact DP only
  std::vector<double> p_even_value;   // index t holds p_{2t}
  double tail_ratio = 0;
  double corrected_ratio = 0;
  double rho_hat = 0;
  bool exact = false;
  std::uint64_t trials = 0;
};

SpectralTable spectral_dp(const WalkGraphSpec& spec, std::size_t n);
SpectralTable spectral_mc(const WalkGraphSpec& spec, std::size_t n,
                          std::uint64_t trials, std::uint64_t seed);

}  // namespace gencase
