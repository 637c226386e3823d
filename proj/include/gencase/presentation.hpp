#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gencase/solver.hpp"
#include "gencase/word.hpp"

namespace gencase {

/// Finite presentation with freely and cyclically reduced relators.
/// Construction normalizes the relators and rejects any that vanish.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;

  static Presentation make(Alphabet alphabet, std::vector<Word> relators);
};

struct SymmetrizedEntry {
  Word word;
  std::size_t relator;   // origin relator index
  std::size_t rotation;  // cyclic offset
  bool inverted;
};

/// Closure of the relators under cyclic permutation and inversion. Entries
/// with equal words but distinct origins are kept separate; proper powers
/// depend on that.
struct SymmetrizedSet {
  std::vector<SymmetrizedEntry> entries;
  std::size_t min_relator_length = 0;  // 0 when there are no relators
  std::size_t max_relator_length = 0;
};

SymmetrizedSet symmetrize(const Presentation& p);

struct MetricConditionReport {
  bool passes = false;
  std::size_t max_piece_length = 0;
  std::size_t min_relator_length = 0;
  double lambda = 0;
};

/// C'(lambda) check. A piece is a proper common prefix of two entries at
/// distinct origins; passes iff max_piece < lambda * min_relator (strict),
/// vacuously for an empty relator set.
MetricConditionReport verify_metric_condition(const Presentation& p,
                                              double lambda = 1.0 / 6.0);

/// Dehn's algorithm as a total word-problem solver. Requires the metric
/// condition at `lambda` (refuses to construct otherwise). Replacement
/// policy: leftmost longest over-half match against the symmetrized set,
/// complement from the same entry. Cost model: letters scanned and
/// compared, plus splice work; O(|w|) with a presentation constant.
Solver dehn_solver(const Presentation& p, double lambda = 1.0 / 6.0);

/// Text format: first line the generator names, each following nonempty
/// line one relator in word format.
Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);

/// Genus-2 surface group <a,b,c,d | [a,b][c,d]>.
Presentation surface_presentation();
/// a -> a, b -> 1, c -> b, d -> 1 onto F(a,b); kills the surface relator.
Homomorphism surface_to_free_homomorphism();

}  // namespace gencase
