#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gencase/bigint.hpp"
#include "gencase/rng.hpp"

namespace gencase {

/// Generator names of a finite rank-g free basis. The letter set X has
/// size k = 2g: every generator together with its formal inverse.
class Alphabet {
 public:
  /// Empty placeholder; every real alphabet comes from the validating
  /// constructor below.
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> generator_names);

  std::size_t generators() const { return names_.size(); }  // g
  std::size_t letters() const { return 2 * names_.size(); }  // k
  const std::string& name(std::size_t gen) const { return names_.at(gen); }
  const std::vector<std::string>& names() const { return names_; }
  bool single_char_names() const { return single_char_; }

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  bool single_char_ = false;
};

/// One signed letter. Code layout: 2*gen for the generator, 2*gen+1 for its
/// inverse, so `code ^ 1` is the formal inverse.
class Letter {
 public:
  Letter(std::uint32_t gen, int sign) : code_(2 * gen + (sign < 0 ? 1 : 0)) {}
  static Letter from_code(std::uint32_t code) { return Letter(code); }

  std::uint32_t gen() const { return code_ >> 1; }
  int sign() const { return (code_ & 1) ? -1 : 1; }
  std::uint32_t code() const { return code_; }
  Letter inverse() const { return Letter(code_ ^ 1); }

  bool operator==(const Letter&) const = default;

 private:
  explicit Letter(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

/// Plain word over some alphabet; the empty word represents the identity.
/// Reducedness is a checked property, never cached state.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  void append(const Word& o) {
    letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
  }

  /// Formal inverse: reversed order, all signs flipped.
  Word inverse() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& a, const Word& b);

enum class Universe { AllWords, ReducedWords };

/// Freely reduced form; idempotent, length drops by the number of
/// cancelled pairs (parity preserved).
Word free_reduce(const Word& w);
bool is_reduced(const Word& w);

/// Cyclically reduced form (freely reduce, then strip inverse end pairs).
Word cyclic_reduce(const Word& w);

std::uint64_t word_hash(const Word& w);

// Text format: whitespace-separated tokens, inverse marked by a trailing
// apostrophe ("a b' a"). Alphabets whose names are single characters also
// accept the compact form where uppercase means inverse ("abA").
std::string format_word(const Alphabet& alphabet, const Word& w);
Word parse_word(const Alphabet& alphabet, const std::string& text);

struct EnumerationBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// |B_n|: number of words of length <= n in the universe.
BigInt ball_count(const Alphabet& alphabet, Universe universe, std::size_t n);
/// Number of words of length exactly n in the universe.
BigInt slice_count(const Alphabet& alphabet, Universe universe, std::size_t n);

/// Emits every length-n word of the universe exactly once, in lexicographic
/// letter-code order. Throws EnumerationBudgetError when the slice is larger
/// than `budget`.
void enumerate_words(const Alphabet& alphabet, Universe universe,
                     std::size_t n, std::uint64_t budget,
                     const std::function<void(const Word&)>& fn);

/// Uniform over the length-n slice of the universe.
Word sample_word(const Alphabet& alphabet, Universe universe, std::size_t n,
                 Rng& rng);

}  // namespace gencase
