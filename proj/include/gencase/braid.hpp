#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gencase/bigint.hpp"
#include "gencase/solver.hpp"
#include "gencase/word.hpp"

namespace gencase {

/// Braid words on `strands` strands are plain Words whose generator index i
/// (0-based) stands for sigma_{i+1}. Text form is whitespace-separated
/// signed integers: "1 2 -1" = sigma_1 sigma_2 sigma_1^-1.
Alphabet braid_alphabet(int strands);
Word parse_braid_integers(int strands, const std::string& text);
std::string format_braid_integers(const Word& braid);
void check_braid_word(int strands, const Word& braid);

/// Position-to-position strand permutation tables.
using Perm = std::vector<std::uint8_t>;

Perm perm_identity(int strands);
Perm perm_delta(int strands);  // the half twist: i -> n-1-i
bool perm_is_identity(const Perm& p);

/// Image of the braid under B_n -> S_n; identity iff the braid is pure.
Perm permutation_of(int strands, const Word& braid);
bool is_pure(int strands, const Word& braid);

/// Images of the free generators x_1..x_n under the right Artin action,
/// freely reduced, as Words whose generator index j stands for x_{j+1}.
/// The action is faithful: the braid is trivial iff this is the identity.
std::vector<Word> artin_action(int strands, const Word& braid);
bool artin_is_identity(const std::vector<Word>& action);

/// Left-weighted canonical form Delta^inf A_1 ... A_len. Factors are
/// permutation braids, never trivial or Delta; equal braids get equal forms.
struct GarsideNormalForm {
  int strands = 2;
  long long inf = 0;
  std::vector<Perm> factors;

  bool trivial() const { return inf == 0 && factors.empty(); }
  std::size_t canonical_length() const { return factors.size(); }
  bool operator==(const GarsideNormalForm&) const = default;
};

struct GarsideResult {
  GarsideNormalForm form;
  std::uint64_t cost = 1;  // letter, tau and factor-transfer updates
};

GarsideResult garside_normal_form(int strands, const Word& braid);
bool is_trivial_braid(int strands, const Word& braid);

/// Quadratic total solver for WP(B_n) via the normal form; step cost is the
/// factor-update count of the computation.
Solver garside_solver(int strands);

/// Deletes all but the first `keep` strands of a pure braid; the image is a
/// braid word on `keep` strands. Throws on non-pure input.
Word forget_strands(int strands, const Word& pure_braid, std::size_t keep = 3);

struct Mat2 {
  BigInt a, b, c, d;
  static Mat2 identity();
  Mat2 operator*(const Mat2& o) const;
  bool operator==(const Mat2&) const = default;
  BigInt det() const { return a * d - b * c; }
  std::size_t max_bit_length() const;
};

struct Mat2Mod {
  std::uint64_t a = 1, b = 0, c = 0, d = 1;
  std::uint64_t p = 0;
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
};

enum class Sl2Mode { Exact, ModP };

inline constexpr std::uint64_t kDefaultSl2Prime = 2147483647ull;  // 2^31 - 1

/// sigma_1 -> [[1,1],[0,1]], sigma_2 -> [[1,0],[-1,1]] on 3-strand words.
/// A non-identity image certifies the braid is nontrivial; the kernel is
/// the center, generated by Delta^4.
Mat2 sl2_eval(const Word& b3_braid);
Mat2Mod sl2_eval_mod(const Word& b3_braid, std::uint64_t p = kDefaultSl2Prime);

/// Generic filter: permutation test, then strand forgetting to B_3, then
/// the SL(2) evaluation. Sound NotInLanguage answers only. ModP costs one
/// unit per letter; Exact charges each multiply by the entry word-size.
Solver braid_filter(int strands, Sl2Mode mode = Sl2Mode::ModP,
                    std::uint64_t p = kDefaultSl2Prime);

struct BraidPipeline {
  Solver total;
  Solver filter;
  Solver combined;
};

BraidPipeline braid_pipeline(int strands, Sl2Mode mode = Sl2Mode::ModP,
                             std::uint64_t p = kDefaultSl2Prime);

}  // namespace gencase
