#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gencase/measure.hpp"

using namespace gencase;

namespace {

const Alphabet& f2() {
  static Alphabet a({"a", "b"});
  return a;
}

constexpr double kSixOverPiSq = 0.6079271018540267;

}  // namespace

TEST_CASE("cauchy distribution") {
  LengthDistribution d = LengthDistribution::cauchy(1000000);
  CHECK(d.d(0) == 0.0);
  CHECK(d.d(1) == doctest::Approx(kSixOverPiSq).epsilon(1e-5));
  CHECK(d.d(2) == doctest::Approx(kSixOverPiSq / 4).epsilon(1e-5));
  CHECK(d.truncation_error() < 1e-5);
  double sum = 0;
  LengthDistribution small = LengthDistribution::cauchy(64);
  for (std::size_t n = 0; n <= 64; ++n) sum += small.d(n);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("geometric distribution") {
  LengthDistribution d = LengthDistribution::geometric(0.5);
  CHECK(d.d(3) == doctest::Approx(1.0 / 16).epsilon(1e-12));
  CHECK(d.d(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(LengthDistribution::geometric(0.0), std::invalid_argument);
  CHECK_THROWS_AS(LengthDistribution::geometric(1.0), std::invalid_argument);
}

TEST_CASE("uniform range and point mass") {
  LengthDistribution u = LengthDistribution::uniform_range(1, 4);
  CHECK(u.d(2) == doctest::Approx(0.25));
  CHECK(u.d(0) == 0.0);
  CHECK(u.d(5) == 0.0);
  CHECK_THROWS_AS(LengthDistribution::uniform_range(4, 1), std::invalid_argument);
  LengthDistribution p = LengthDistribution::point_mass(5);
  CHECK(p.d(5) == 1.0);
  CHECK(p.d(4) == 0.0);
}

TEST_CASE("mass examples") {
  LengthInvariantMeasure m02(f2(), Universe::AllWords,
                             LengthDistribution::uniform_range(0, 2));
  CHECK(m02.mass(Word()) == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(m02.mass(parse_word(f2(), "a b")) == doctest::Approx(1.0 / 48).epsilon(1e-12));

  LengthInvariantMeasure cauchy(f2(), Universe::AllWords,
                                LengthDistribution::cauchy(100000));
  CHECK(cauchy.mass(parse_word(f2(), "a b")) ==
        doctest::Approx(kSixOverPiSq / 4 / 16).epsilon(1e-5));
  CHECK(cauchy.mass(parse_word(f2(), "b' a")) ==
        cauchy.mass(parse_word(f2(), "a b")));
}

TEST_CASE("reduced universe mass") {
  LengthInvariantMeasure m(f2(), Universe::ReducedWords,
                           LengthDistribution::uniform_range(0, 2));
  // reduced slice at length 2 has 12 words
  CHECK(m.mass(parse_word(f2(), "a b")) == doctest::Approx(1.0 / 36).epsilon(1e-12));
  CHECK_THROWS_AS(m.mass(parse_word(f2(), "a a'")), std::invalid_argument);
}

TEST_CASE("masses sum to one over enumeration plus tail") {
  auto check_kind = [](const LengthDistribution& dist, Universe universe) {
    LengthInvariantMeasure m(f2(), universe, dist);
    double total = 0;
    for (std::size_t n = 0; n <= 6; ++n) {
      enumerate_words(f2(), universe, n, 1u << 20,
                      [&](const Word& w) { total += m.mass(w); });
    }
    for (std::size_t n = 7; n <= dist.n_max(); ++n) total += dist.d(n);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
  };
  check_kind(LengthDistribution::cauchy(2048), Universe::AllWords);
  check_kind(LengthDistribution::geometric(0.5, 2048), Universe::AllWords);
  check_kind(LengthDistribution::uniform_range(1, 4), Universe::AllWords);
  check_kind(LengthDistribution::point_mass(3), Universe::AllWords);
  check_kind(LengthDistribution::geometric(0.5, 2048), Universe::ReducedWords);
}

TEST_CASE("length invariance is exact on slices") {
  LengthInvariantMeasure m(f2(), Universe::AllWords,
                           LengthDistribution::geometric(0.7, 512));
  double lo = 2, hi = -1;
  enumerate_words(f2(), Universe::AllWords, 3, 64, [&](const Word& w) {
    double v = m.mass(w);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  });
  CHECK(lo == hi);
}

TEST_CASE("sampling lengths") {
  LengthInvariantMeasure point0(f2(), Universe::AllWords,
                                LengthDistribution::point_mass(0));
  LengthInvariantMeasure point5(f2(), Universe::AllWords,
                                LengthDistribution::point_mass(5));
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    CHECK(point0.sample(rng).empty());
    CHECK(point5.sample(rng).size() == 5);
  }
}

TEST_CASE("geometric sampler mean within 3 sigma") {
  LengthInvariantMeasure m(f2(), Universe::AllWords,
                           LengthDistribution::geometric(0.5));
  Rng rng(99);
  const std::uint64_t draws = 100000;
  double sum = 0;
  for (std::uint64_t i = 0; i < draws; ++i) sum += static_cast<double>(m.sample(rng).size());
  double mean = sum / static_cast<double>(draws);
  // mean r/(1-r) = 1, var r/(1-r)^2 = 2, sigma of mean = sqrt(2/draws)
  double sigma = std::sqrt(2.0 / static_cast<double>(draws));
  CHECK(std::abs(mean - 1.0) < 3 * sigma);
}

TEST_CASE("sampler matches table: Kolmogorov-Smirnov at 0.01") {
  LengthDistribution dist = LengthDistribution::geometric(0.8, 512);
  LengthInvariantMeasure m(f2(), Universe::AllWords, dist);
  Rng rng(123);
  const std::uint64_t draws = 100000;
  std::vector<std::uint64_t> counts(513, 0);
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[m.sample(rng).size()];
  double cdf_emp = 0, cdf_true = 0, d_max = 0;
  for (std::size_t n = 0; n <= 512; ++n) {
    cdf_emp += static_cast<double>(counts[n]) / static_cast<double>(draws);
    cdf_true += dist.d(n);
    d_max = std::max(d_max, std::abs(cdf_emp - cdf_true));
  }
  CHECK(d_max * std::sqrt(static_cast<double>(draws)) < 1.6276);
}

TEST_CASE("measure spec parsing") {
  CHECK(parse_measure_spec(f2(), "cauchy").distribution().kind() == DistKind::Cauchy);
  LengthInvariantMeasure g = parse_measure_spec(f2(), "geom:0.9");
  CHECK(g.distribution().kind() == DistKind::Geometric);
  CHECK(g.universe() == Universe::AllWords);
  LengthInvariantMeasure u = parse_measure_spec(f2(), "uniform:1:256");
  CHECK(u.distribution().d(100) == doctest::Approx(1.0 / 256));
  LengthInvariantMeasure p = parse_measure_spec(f2(), "point:128@reduced");
  CHECK(p.universe() == Universe::ReducedWords);
  CHECK(p.distribution().d(128) == 1.0);
  CHECK_THROWS_AS(parse_measure_spec(f2(), "pareto:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_measure_spec(f2(), "geom:1.5"), std::invalid_argument);
}

TEST_CASE("truncation rebuild") {
  LengthDistribution c = LengthDistribution::cauchy(256);
  LengthDistribution half = c.truncated(128);
  CHECK(half.n_max() == 128);
  CHECK(half.kind() == DistKind::Cauchy);
  // renormalized over fewer terms, each point slightly heavier
  CHECK(half.d(1) > c.d(1));
}
