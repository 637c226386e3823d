#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gencase/harness.hpp"
#include "test_util.hpp"

using namespace gencase;

namespace {

ProfileConfig base_config(std::vector<std::size_t> lengths) {
  ProfileConfig c;
  c.lengths = std::move(lengths);
  c.samples = 400;
  c.seed = 11;
  return c;
}

}  // namespace

TEST_CASE("free solver profile: ratio is exactly one") {
  Pipeline p = free_pipeline(2);
  ProfileConfig c = base_config({1, 2, 4, 8, 16});
  c.machine = MachineSel::TotalOnly;
  ResultTable t = avg_time_profile(p, c);
  for (const auto& row : t.rows) {
    CHECK(row.mean_t == doctest::Approx(static_cast<double>(row.n)));
    CHECK(row.ratio == doctest::Approx(1.0));
    CHECK(row.max_t == row.n);
    CHECK(row.undecided_frac == 0.0);
  }
  CHECK(uniform_bound_metric(t) == doctest::Approx(1.0));
  CHECK(t.contract_violations == 0);
}

TEST_CASE("forced quadratic raced against a linear filter: mean is 2n-1") {
  Pipeline p = free_pipeline(2);
  ProfileConfig c = base_config({2, 4, 8, 16, 32});
  c.forced_total = ComplexityBound::quadratic(1);
  ResultTable t = avg_time_profile(p, c);
  for (const auto& row : t.rows) {
    CHECK(row.mean_t == doctest::Approx(2.0 * static_cast<double>(row.n) - 1.0));
  }
  // ratio approaches 2 from below
  CHECK(t.rows.back().ratio == doctest::Approx(2.0 - 1.0 / 32).epsilon(1e-9));
  CHECK(t.contract_violations == 0);
}

TEST_CASE("profile validation") {
  Pipeline p = free_pipeline(2);
  ProfileConfig empty;
  CHECK_THROWS_AS(avg_time_profile(p, empty), std::invalid_argument);
  ProfileConfig bad = base_config({8, 4});
  CHECK_THROWS_AS(avg_time_profile(p, bad), std::invalid_argument);
  ProfileConfig zero = base_config({4});
  zero.samples = 0;
  CHECK_THROWS_AS(avg_time_profile(p, zero), std::invalid_argument);
}

TEST_CASE("uniform bound metric on a synthetic table") {
  ResultTable t;
  for (std::size_t n : {1, 2, 3}) {
    ResultRow row;
    row.n = n;
    row.ratio = 2.0;
    t.rows.push_back(row);
  }
  CHECK(uniform_bound_metric(t) == 2.0);
  ResultTable empty;
  CHECK_THROWS_AS(uniform_bound_metric(empty), std::invalid_argument);
}

TEST_CASE("family weighted sums sit below the supremum") {
  Pipeline p = surface_pipeline();
  ProfileConfig c = base_config({1, 2, 3, 4, 6, 8, 12, 16});
  c.samples = 300;
  ResultTable t = avg_time_profile(p, c);
  double sup = uniform_bound_metric(t);
  for (const char* spec : {"cauchy", "geom:0.9", "uniform:1:16"}) {
    LengthInvariantMeasure m = parse_measure_spec(p.alphabet, spec, 16);
    WeightedSum ws = family_weighted_sum(t, m.distribution());
    CHECK(ws.value <= sup * ws.covered_mass + 1e-12);
    CHECK(ws.covered_mass <= 1.0 + 1e-12);
  }
}

TEST_CASE("integral of a linear solver against linear normalization is one") {
  Pipeline p = free_pipeline(2);
  Solver total = configured_solver(p, MachineSel::TotalOnly, std::nullopt);
  LengthDistribution cauchy = LengthDistribution::cauchy(64);
  IntegralReport rep =
      integral_estimate(p.alphabet, total, cauchy, ComplexityBound::linear(),
                        5000, 3, Universe::AllWords);
  CHECK(rep.value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_FALSE(rep.divergence_flag);
}

TEST_CASE("divergence heuristic flags the harmonic series") {
  Pipeline p = free_pipeline(2);
  ProfileConfig c;
  Solver forced =
      configured_solver(p, MachineSel::TotalOnly, ComplexityBound::quadratic(1));
  LengthDistribution cauchy = LengthDistribution::cauchy(256);
  IntegralReport rep =
      integral_estimate(p.alphabet, forced, cauchy, ComplexityBound::linear(),
                        30000, 5, Universe::AllWords);
  CHECK(rep.divergence_flag);
  CHECK(rep.growth > 0.10);
  CHECK(rep.growth < 0.20);

  // same pipeline without forcing converges
  Solver plain = configured_solver(p, MachineSel::TotalOnly, std::nullopt);
  IntegralReport ok =
      integral_estimate(p.alphabet, plain, cauchy, ComplexityBound::linear(),
                        30000, 5, Universe::AllWords);
  CHECK_FALSE(ok.divergence_flag);
}

TEST_CASE("cauchy average check: linear pipeline converges") {
  Pipeline p = free_pipeline(2);
  Solver total = configured_solver(p, MachineSel::TotalOnly, std::nullopt);
  CauchyCheckReport rep = cauchy_average_check(p.alphabet, total, 1.0, 0.5, 256,
                                               100, 7, Universe::AllWords);
  CHECK(rep.increment_ratio < 0.05);
  CHECK(rep.sum_at_full > rep.sum_at_half);
}

TEST_CASE("cauchy average check matches the analytic series for forced costs") {
  Pipeline p = free_pipeline(2);
  Solver forced =
      configured_solver(p, MachineSel::TotalOnly, ComplexityBound::quadratic(1));
  // E_n[T] = n^2 exactly for n >= 1, so each term is (6/pi^2) n^{-1.5}
  CauchyCheckReport rep = cauchy_average_check(p.alphabet, forced, 2.0, 0.5, 128,
                                               50, 9, Universe::AllWords);
  double analytic = 0;
  constexpr double kPi = 3.14159265358979323846;
  for (int n = 1; n <= 128; ++n)
    analytic += (6.0 / (kPi * kPi)) * std::pow(n, -1.5);
  CHECK(rep.sum_at_full == doctest::Approx(analytic).epsilon(1e-9));

  // large degree: terms stay bounded and sums monotone
  CauchyCheckReport big = cauchy_average_check(p.alphabet, forced, 6.0, 0.5, 64,
                                               50, 9, Universe::AllWords);
  double prev = 0;
  for (const auto& cp : big.checkpoints) {
    CHECK(cp.partial_sum >= prev);
    prev = cp.partial_sum;
  }
  CHECK(big.sum_at_full < 1.0);
}

TEST_CASE("generic density experiment") {
  Pipeline surface = surface_pipeline();
  GenericDecayReport rep = generic_density_experiment(
      surface.alphabet, *surface.filter, {1, 2, 3, 4}, 100, 3);
  REQUIRE(rep.rows.size() == 4);
  for (const auto& row : rep.rows) CHECK(row.exact);

  // exact enumerated value at n = 4 recomputed directly
  Homomorphism h = surface_to_free_homomorphism();
  std::uint64_t undecided = 0, total = 0;
  enumerate_words(surface.alphabet, Universe::AllWords, 4, 1u << 16,
                  [&](const Word& w) {
                    ++total;
                    if (apply_homomorphism(h, w).empty()) ++undecided;
                  });
  CHECK(rep.rows[3].undecided ==
        doctest::Approx(static_cast<double>(undecided) / static_cast<double>(total)));

  // the always-deciding free filter never reports undecided
  Pipeline free = free_pipeline(2);
  GenericDecayReport none = generic_density_experiment(
      free.alphabet, *free.filter, {1, 2, 4, 8}, 200, 4);
  for (const auto& row : none.rows) CHECK(row.undecided == 0.0);
  CHECK_FALSE(none.fit.has_value());
}

TEST_CASE("csv output is deterministic and fixed-format") {
  Pipeline p = surface_pipeline();
  ProfileConfig c = base_config({2, 4, 12});
  c.samples = 150;
  ResultTable t1 = avg_time_profile(p, c);
  ResultTable t2 = avg_time_profile(p, c);
  CHECK(to_csv(t1) == to_csv(t2));
  CHECK(to_csv(t1).rfind("n,samples,mean_T,ci_half,max_T,undecided_frac,ratio\n", 0) == 0);

  ProfileConfig c2 = c;
  c2.seed = 999;
  ResultTable t3 = avg_time_profile(p, c2);
  // sampled rows differ under a different seed (n = 12 is sampled)
  CHECK(to_csv(t3) != to_csv(t1));

  std::string json = to_json(t1);
  CHECK(json.find("\"rows\"") != std::string::npos);
  CHECK(json.find("\"pipeline\"") != std::string::npos);
}

TEST_CASE("monte carlo rows agree with exact rows") {
  Pipeline p = surface_pipeline();
  ProfileConfig exact_cfg = base_config({1, 2, 3, 4, 5});
  ResultTable exact = avg_time_profile(p, exact_cfg);

  ProfileConfig mc_cfg = exact_cfg;
  mc_cfg.prefer_exact = false;
  mc_cfg.samples = 3000;
  ResultTable mc = avg_time_profile(p, mc_cfg);

  std::size_t within = 0;
  for (std::size_t i = 0; i < exact.rows.size(); ++i) {
    double diff = std::abs(mc.rows[i].mean_t - exact.rows[i].mean_t);
    if (diff <= std::max(mc.rows[i].ci_half, 1e-9)) ++within;
  }
  CHECK(within >= exact.rows.size() - 1);
}

TEST_CASE("step cap failures are reported per row") {
  Pipeline p = free_pipeline(2);
  ProfileConfig c = base_config({64});
  c.forced_total = ComplexityBound::quadratic(1);
  c.machine = MachineSel::TotalOnly;
  c.step_cap = 100;  // 64^2 = 4096 always exceeds this
  ResultTable t = avg_time_profile(p, c);
  CHECK(t.rows[0].cap_failures == 400);
  CHECK(t.rows[0].samples == 0);
}

TEST_CASE("combined answers equal total answers, exhaustive n <= 8 on surface") {
  Pipeline p = surface_pipeline();
  std::uint64_t mismatches = 0;
  for (std::size_t n = 0; n <= 8; ++n) {
    enumerate_words(p.alphabet, Universe::AllWords, n, 1u << 25, [&](const Word& w) {
      auto combined = p.combined.make(w);
      auto total = p.total.make(w);
      if (combined->final_record().answer != total->final_record().answer)
        ++mismatches;
    });
  }
  CHECK(mismatches == 0);
}

TEST_CASE("undecided fraction shows up in combined profiles") {
  Pipeline p = surface_pipeline();
  ProfileConfig c = base_config({2});
  ResultTable t = avg_time_profile(p, c);
  // at n = 2, words like "b d'" have trivial image: undecided filter runs exist
  CHECK(t.rows[0].undecided_frac > 0.0);
  CHECK(t.rows[0].undecided_frac < 1.0);
}
