#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <set>

#include "gencase/presentation.hpp"
#include "test_util.hpp"

using namespace gencase;

namespace {

using gencase::testing::random_relator_product;

Presentation abab() {
  Alphabet ab({"a", "b"});
  return Presentation::make(ab, {parse_word(ab, "a b a b")});
}

}  // namespace

TEST_CASE("presentation normalization") {
  Alphabet ab({"a", "b"});
  Presentation p = Presentation::make(ab, {parse_word(ab, "b a b'")});
  CHECK(p.relators[0] == parse_word(ab, "a"));
  CHECK_THROWS_AS(Presentation::make(ab, {parse_word(ab, "a b b' a'")}),
                  std::invalid_argument);
}

TEST_CASE("symmetrize sizes") {
  SymmetrizedSet surface = symmetrize(surface_presentation());
  CHECK(surface.entries.size() == 16);
  CHECK(surface.min_relator_length == 8);
  // all sixteen words distinct for the surface relator
  std::set<std::uint64_t> words;
  for (const auto& e : surface.entries) words.insert(word_hash(e.word));
  CHECK(words.size() == 16);

  Alphabet ab({"a", "b"});
  SymmetrizedSet aaa =
      symmetrize(Presentation::make(ab, {parse_word(ab, "a a a")}));
  CHECK(aaa.entries.size() == 6);  // 3 rotations x 2 inversions, words coincide
  std::set<std::uint64_t> aaa_words;
  for (const auto& e : aaa.entries) aaa_words.insert(word_hash(e.word));
  CHECK(aaa_words.size() == 2);

  SymmetrizedSet short2 = symmetrize(Presentation::make(ab, {parse_word(ab, "a b")}));
  CHECK(short2.entries.size() == 4);
}

TEST_CASE("metric condition") {
  MetricConditionReport surface = verify_metric_condition(surface_presentation());
  CHECK(surface.passes);
  CHECK(surface.max_piece_length == 1);
  CHECK(surface.min_relator_length == 8);

  MetricConditionReport bad = verify_metric_condition(abab());
  CHECK_FALSE(bad.passes);
  CHECK(bad.max_piece_length == 3);  // "a b a" via the rotation-by-2 origin

  Alphabet ab({"a", "b"});
  MetricConditionReport empty =
      verify_metric_condition(Presentation::make(ab, {}));
  CHECK(empty.passes);
  CHECK(empty.max_piece_length == 0);

  // strict inequality at the boundary lambda
  MetricConditionReport tight =
      verify_metric_condition(surface_presentation(), 1.0 / 8.0);
  CHECK_FALSE(tight.passes);
}

TEST_CASE("dehn solver construction") {
  CHECK_THROWS_AS(dehn_solver(abab()), std::invalid_argument);
  Solver s = dehn_solver(surface_presentation());
  CHECK(s.total);
}

TEST_CASE("dehn solver examples") {
  Presentation p = surface_presentation();
  Solver s = dehn_solver(p);
  CHECK(run(s, p.relators[0]).answer == Answer::InLanguage);
  CHECK(run(s, parse_word(p.alphabet, "c d c' d'")).answer == Answer::NotInLanguage);
  CHECK(run(s, parse_word(p.alphabet, "b' c d c' d' a b a'")).answer ==
        Answer::InLanguage);
  CHECK(run(s, Word()).answer == Answer::InLanguage);
  CHECK(run(s, parse_word(p.alphabet, "a")).answer == Answer::NotInLanguage);
  // freely non-reduced input reduces first
  CHECK(run(s, parse_word(p.alphabet, "a a' b b'")).answer == Answer::InLanguage);
}

TEST_CASE("dehn accepts products of conjugates of relators") {
  Presentation p = surface_presentation();
  Solver s = dehn_solver(p);
  Rng rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = random_relator_product(p, 4, 6, rng);
    CHECK(run(s, w).answer == Answer::InLanguage);
  }
}

TEST_CASE("dehn rejects nontrivial words near relators") {
  Presentation p = surface_presentation();
  Solver s = dehn_solver(p);
  Rng rng(78);
  // relator times one extra letter is never trivial
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_relator_product(p, 2, 4, rng);
    std::uint32_t code = static_cast<std::uint32_t>(rng.below(8));
    w.push_back(Letter::from_code(code));
    CHECK(run(s, w).answer == Answer::NotInLanguage);
  }
}

TEST_CASE("dehn never contradicts the quotient filter, exhaustive n <= 8") {
  Presentation p = surface_presentation();
  Solver dehn = dehn_solver(p);
  Homomorphism h = surface_to_free_homomorphism();

  // letter code -> image letter code in F2, or -1 for the killed letters
  std::array<int, 8> image_code{};
  for (std::uint32_t code = 0; code < 8; ++code) {
    const Word& img = h.images[code >> 1];
    if (img.empty()) {
      image_code[code] = -1;
    } else {
      Letter base = img[0];
      image_code[code] =
          static_cast<int>((code & 1) ? base.inverse().code() : base.code());
    }
  }

  std::uint64_t filter_negative = 0;
  std::uint64_t contradictions = 0;
  for (std::size_t n = 0; n <= 8; ++n) {
    enumerate_words(p.alphabet, Universe::AllWords, n, 1u << 25, [&](const Word& w) {
      // inline quotient image with stack reduction
      std::array<std::uint32_t, 8> stack{};
      std::size_t depth = 0;
      for (const Letter& l : w) {
        int c = image_code[l.code()];
        if (c < 0) continue;
        std::uint32_t code = static_cast<std::uint32_t>(c);
        if (depth > 0 && stack[depth - 1] == (code ^ 1u)) {
          --depth;
        } else {
          stack[depth++] = code;
        }
      }
      if (depth == 0) return;  // filter undecided, nothing to check
      ++filter_negative;
      if (run(dehn, w).answer != Answer::NotInLanguage) ++contradictions;
    });
  }
  CHECK(filter_negative > 10000000);
  CHECK(contradictions == 0);
}

TEST_CASE("presentation text round trip") {
  std::string text = "a b c d\na b a' b' c d c' d'\n";
  Presentation p = parse_presentation(text);
  CHECK(p.alphabet.generators() == 4);
  CHECK(p.relators.size() == 1);
  CHECK(format_presentation(p) == text);
  CHECK_THROWS_AS(parse_presentation(""), std::invalid_argument);
}
