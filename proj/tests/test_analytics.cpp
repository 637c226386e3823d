#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gencase/analytics.hpp"
#include "test_util.hpp"

using namespace gencase;

namespace {

const Alphabet& f2() {
  static Alphabet a({"a", "b"});
  return a;
}

bool trivial_in_f2(const Word& w) { return free_reduce(w).empty(); }

}  // namespace

TEST_CASE("exact densities") {
  DensityEstimate wp4 =
      density_exact(trivial_in_f2, f2(), Universe::AllWords, 4);
  CHECK(wp4.numerator == 33);
  CHECK(wp4.denominator == 341);

  DensityEstimate all = density_exact([](const Word&) { return true; }, f2(),
                                      Universe::AllWords, 5);
  CHECK(all.value == 1.0);

  auto starts_with_a = [](const Word& w) {
    return !w.empty() && w[0] == Letter(0, 1);
  };
  DensityEstimate pref = density_exact(starts_with_a, f2(), Universe::AllWords, 2);
  CHECK(pref.numerator == 5);
  CHECK(pref.denominator == 21);

  DensityEstimate slice =
      density_exact(trivial_in_f2, f2(), Universe::AllWords, 4, DensityScope::Slice);
  CHECK(slice.numerator == 28);
  CHECK(slice.denominator == 256);

  CHECK_THROWS_AS(
      density_exact(trivial_in_f2, f2(), Universe::AllWords, 30, DensityScope::Ball, 1000),
      EnumerationBudgetError);
}

TEST_CASE("monte carlo densities") {
  DensityEstimate slice = density_mc(trivial_in_f2, f2(), Universe::AllWords, 4,
                                     100000, 17, DensityScope::Slice);
  double truth = 28.0 / 256.0;
  CHECK(std::abs(slice.value - truth) <= slice.ci_half);

  DensityEstimate one = density_mc([](const Word&) { return true; }, f2(),
                                   Universe::AllWords, 4, 1000, 1);
  CHECK(one.value == 1.0);

  CHECK_THROWS_AS(
      density_mc(trivial_in_f2, f2(), Universe::AllWords, 4, 0, 1),
      std::invalid_argument);
}

TEST_CASE("monte carlo covers exact for a predicate family") {
  // hash-residue predicates plus a few structural ones
  std::vector<WordPredicate> family;
  for (std::uint64_t i = 0; i < 46; ++i) {
    family.push_back([i](const Word& w) { return word_hash(w) % (i + 2) == 0; });
  }
  family.push_back(trivial_in_f2);
  family.push_back([](const Word& w) { return w.size() % 2 == 0; });
  family.push_back([](const Word& w) { return !w.empty() && w[0].sign() < 0; });
  family.push_back([](const Word& w) { return is_reduced(w); });

  std::size_t covered = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    DensityEstimate exact = density_exact(family[i], f2(), Universe::AllWords, 6);
    DensityEstimate mc = density_mc(family[i], f2(), Universe::AllWords, 6,
                                    20000, 1000 + i);
    if (std::abs(mc.value - exact.value) <= mc.ci_half) ++covered;
  }
  CHECK(covered >= 48);  // 99% Wilson over 50 predicates
}

TEST_CASE("reduced-word universe densities use reduced-slice denominators") {
  DensityEstimate d =
      density_exact(trivial_in_f2, f2(), Universe::ReducedWords, 2);
  // only the empty word is trivial among reduced words; |B_2| = 17 there
  CHECK(d.numerator == 1);
  CHECK(d.denominator == 17);
}

TEST_CASE("density is monotone under predicate inclusion") {
  auto even_len = [](const Word& w) { return w.size() % 2 == 0; };
  DensityEstimate small = density_exact(trivial_in_f2, f2(), Universe::AllWords, 6);
  DensityEstimate large = density_exact(even_len, f2(), Universe::AllWords, 6);
  CHECK(small.value <= large.value);
}

TEST_CASE("exponential fit recovers exact decay") {
  std::vector<std::pair<double, double>> pts;
  for (int n = 1; n <= 32; ++n) pts.push_back({double(n), std::pow(0.5, n)});
  ExpFit f = exp_fit(pts);
  CHECK(std::abs(f.sigma_hat - 0.5) < 1e-6);
  CHECK(std::abs(f.c_hat - 1.0) < 1e-6);
  CHECK(f.r_squared == doctest::Approx(1.0));
  CHECK(f.exponential);

  std::vector<std::pair<double, double>> scaled;
  for (int n = 1; n <= 32; ++n) scaled.push_back({double(n), 3.0 * std::pow(0.8, n)});
  ExpFit g = exp_fit(scaled);
  CHECK(std::abs(g.sigma_hat - 0.8) < 1e-6);
  CHECK(std::abs(g.c_hat - 3.0) < 1e-6);
}

TEST_CASE("polynomial decay is flagged as non-exponential") {
  std::vector<std::pair<double, double>> pts;
  for (int n = 1; n <= 64; ++n) pts.push_back({double(n), 1.0 / n});
  ExpFit f = exp_fit(pts);
  CHECK(f.r_squared < 0.9);
  CHECK_FALSE(f.exponential);
}

TEST_CASE("exp_fit input validation") {
  std::vector<std::pair<double, double>> empty_residuals = {
      {1, 0.0}, {2, 0.0}, {3, 0.5}, {4, 0.25}};
  CHECK_THROWS_AS(exp_fit(empty_residuals), std::invalid_argument);
  std::vector<std::pair<double, double>> same_n = {{2, 0.5}, {2, 0.25}, {2, 0.125}};
  CHECK_THROWS_AS(exp_fit(same_n), std::invalid_argument);
}

TEST_CASE("cogrowth counts") {
  CHECK(cogrowth_count(0) == BigInt(1));
  CHECK(cogrowth_count(2) == BigInt(4));
  CHECK(cogrowth_count(4) == BigInt(28));
  CHECK(cogrowth_count(1) == BigInt(0));
  CHECK(cogrowth_count(7) == BigInt(0));

  // brute-force cross-check by enumeration
  for (std::size_t n = 0; n <= 10; ++n) {
    std::uint64_t count = 0;
    enumerate_words(f2(), Universe::AllWords, n, 1u << 21, [&](const Word& w) {
      if (free_reduce(w).empty()) ++count;
    });
    CHECK(cogrowth_count(n) == BigInt(count));
  }
}

TEST_CASE("ball density numerator accumulates cogrowth, n <= 12") {
  BigInt acc;
  for (std::size_t n = 0; n <= 12; ++n) {
    acc += cogrowth_count(n);
    if (n == 12) {
      DensityEstimate d = density_exact(trivial_in_f2, f2(), Universe::AllWords,
                                        n, DensityScope::Ball, 1u << 26);
      CHECK(BigInt(d.numerator) == acc);
    }
  }
}

TEST_CASE("return probability chain") {
  auto table4 = return_probability_dp(4, 6);
  CHECK(table4[0].equals(1, 1));
  CHECK(table4[1].equals(1, 4));
  CHECK(table4[2].equals(7, 64));
  auto table2 = return_probability_dp(2, 2);
  CHECK(table2[2].equals(3, 8));
  CHECK_THROWS_AS(return_probability_dp(1, 4), std::invalid_argument);
}

TEST_CASE("walk/word bijection: cogrowth matches the chain exactly") {
  auto table = return_probability_dp(4, 6);
  for (std::size_t t = 0; t <= 6; ++t) {
    Rational words{cogrowth_count(2 * t), BigInt::pow(4, 2 * t)};
    CHECK(words.equals(table[t]));
  }
}
