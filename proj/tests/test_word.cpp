#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gencase/word.hpp"
#include "test_util.hpp"

using namespace gencase;
using gencase::testing::scan_cancel_oracle;

namespace {

const Alphabet& f2() {
  static Alphabet a({"a", "b"});
  return a;
}

}  // namespace

TEST_CASE("alphabet invariants") {
  CHECK(f2().generators() == 2);
  CHECK(f2().letters() == 4);
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"x'"}), std::invalid_argument);
}

TEST_CASE("free reduction examples") {
  CHECK(free_reduce(parse_word(f2(), "a a'")) == Word());
  CHECK(free_reduce(parse_word(f2(), "a b b' a")) == parse_word(f2(), "a a"));
  CHECK(free_reduce(parse_word(f2(), "b a' a b' b a")) == parse_word(f2(), "b a"));
}

TEST_CASE("free reduction properties, exhaustive n <= 8") {
  for (std::size_t n = 0; n <= 8; ++n) {
    enumerate_words(f2(), Universe::AllWords, n, 1u << 20, [&](const Word& w) {
      Word r = free_reduce(w);
      CHECK(r == scan_cancel_oracle(w));
      CHECK(free_reduce(r) == r);
      CHECK(r.size() % 2 == w.size() % 2);
      CHECK(r.size() <= w.size());
      CHECK(free_reduce(concat(w, w.inverse())).empty());
    });
  }
}

TEST_CASE("cyclic reduction") {
  CHECK(cyclic_reduce(parse_word(f2(), "a b a'")) == parse_word(f2(), "b"));
  CHECK(cyclic_reduce(parse_word(f2(), "a b' a'")) == parse_word(f2(), "b'"));
  CHECK(cyclic_reduce(parse_word(f2(), "a a")) == parse_word(f2(), "a a"));
  CHECK(cyclic_reduce(parse_word(f2(), "b a a' b'")).empty());
}

TEST_CASE("ball and slice counts") {
  CHECK(ball_count(f2(), Universe::AllWords, 4) == BigInt(341));
  CHECK(ball_count(f2(), Universe::AllWords, 0) == BigInt(1));
  CHECK(ball_count(f2(), Universe::ReducedWords, 2) == BigInt(17));
  CHECK(slice_count(f2(), Universe::AllWords, 4) == BigInt(256));
  CHECK(slice_count(f2(), Universe::ReducedWords, 2) == BigInt(12));
  // large counts stay exact
  CHECK(ball_count(f2(), Universe::AllWords, 40).to_string() ==
        "1611901092819505566274901");
}

TEST_CASE("ball equals accumulated slices, n <= 8") {
  for (Universe u : {Universe::AllWords, Universe::ReducedWords}) {
    BigInt acc;
    for (std::size_t n = 0; n <= 8; ++n) {
      std::uint64_t count = 0;
      enumerate_words(f2(), u, n, 1u << 20, [&](const Word&) { ++count; });
      acc += BigInt(count);
      CHECK(ball_count(f2(), u, n) == acc);
    }
  }
}

TEST_CASE("enumeration basics") {
  std::uint64_t count = 0;
  enumerate_words(f2(), Universe::AllWords, 1, 16, [&](const Word&) { ++count; });
  CHECK(count == 4);
  count = 0;
  enumerate_words(f2(), Universe::AllWords, 4, 256, [&](const Word&) { ++count; });
  CHECK(count == 256);
  count = 0;
  std::set<std::uint64_t> seen;
  enumerate_words(f2(), Universe::ReducedWords, 2, 16, [&](const Word& w) {
    ++count;
    CHECK(is_reduced(w));
    seen.insert(word_hash(w));
  });
  CHECK(count == 12);
  CHECK(seen.size() == 12);
  CHECK_THROWS_AS(
      enumerate_words(f2(), Universe::AllWords, 20, 1000, [](const Word&) {}),
      EnumerationBudgetError);
}

TEST_CASE("enumeration order is deterministic") {
  std::vector<Word> first, second;
  auto grab = [](std::vector<Word>* out) {
    return [out](const Word& w) { out->push_back(w); };
  };
  enumerate_words(f2(), Universe::AllWords, 2, 100, grab(&first));
  enumerate_words(f2(), Universe::AllWords, 2, 100, grab(&second));
  CHECK(first == second);
  CHECK(first.front() == parse_word(f2(), "a a"));
  CHECK(first.back() == parse_word(f2(), "b' b'"));
}

TEST_CASE("sampling: empty word and determinism") {
  Rng rng(42);
  CHECK(sample_word(f2(), Universe::AllWords, 0, rng).empty());
  Rng r1(7), r2(7);
  for (int i = 0; i < 100; ++i) {
    CHECK(sample_word(f2(), Universe::AllWords, 5, r1) ==
          sample_word(f2(), Universe::AllWords, 5, r2));
  }
}

TEST_CASE("sampling uniformity: chi-square at n=3") {
  // 64 equiprobable cells, 10^4 draws; chi^2(63) at 0.01 is 92.01
  Rng rng(2024);
  std::vector<std::uint64_t> counts(64, 0);
  const std::uint64_t draws = 10000;
  for (std::uint64_t i = 0; i < draws; ++i) {
    Word w = sample_word(f2(), Universe::AllWords, 3, rng);
    std::size_t cell = 0;
    for (const Letter& l : w) cell = cell * 4 + l.code();
    ++counts[cell];
  }
  double expected = static_cast<double>(draws) / 64.0;
  double chi2 = 0;
  for (auto c : counts) {
    double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  CHECK(chi2 < 92.01);
}

TEST_CASE("reduced sampling stays reduced and covers the slice") {
  Rng rng(5);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    Word w = sample_word(f2(), Universe::ReducedWords, 2, rng);
    CHECK(is_reduced(w));
    seen.insert(word_hash(w));
  }
  CHECK(seen.size() == 12);
}

TEST_CASE("text format") {
  Word w = parse_word(f2(), "a b' a");
  CHECK(w.size() == 3);
  CHECK(format_word(f2(), w) == "a b' a");
  CHECK(parse_word(f2(), "abA") == parse_word(f2(), "a b a'"));
  CHECK(parse_word(f2(), "  a   b'  ") == parse_word(f2(), "a b'"));
  CHECK(parse_word(f2(), "").empty());
  CHECK_THROWS_AS(parse_word(f2(), "a q"), std::invalid_argument);

  Alphabet multi({"g1", "g2"});
  Word v = parse_word(multi, "g1 g2' g1'");
  CHECK(format_word(multi, v) == "g1 g2' g1'");
  CHECK_THROWS_AS(parse_word(multi, "g1g2"), std::invalid_argument);
}

TEST_CASE("word inverse and hash") {
  Word w = parse_word(f2(), "a b a'");
  CHECK(w.inverse() == parse_word(f2(), "a b' a'"));
  CHECK(word_hash(w) != word_hash(w.inverse()));
  CHECK(word_hash(Word()) == word_hash(Word()));
}
