#include "gencase/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "gencase/rng.hpp"

namespace gencase {

namespace {

constexpr double kZ99 = 2.5758293035489004;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct RunningStats {
  std::uint64_t count = 0;
  double sum = 0, sum_sq = 0;
  std::uint64_t max = 0;
  std::uint64_t undecided = 0;

  void add(std::uint64_t t, bool undecided_run) {
    ++count;
    double x = static_cast<double>(t);
    sum += x;
    sum_sq += x * x;
    max = std::max(max, t);
    if (undecided_run) ++undecided;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0; }
  double se() const {
    if (count < 2) return 0;
    double n = static_cast<double>(count);
    double var = (sum_sq - sum * sum / n) / (n - 1);
    return var > 0 ? std::sqrt(var / n) : 0;
  }
};

// One observed run: step count, whether the filter stage ended undecided,
// and the combinator contract check when inner records are available.
struct Observation {
  std::uint64_t steps;
  bool undecided;
  bool contract_violated;
};

Observation observe(const Solver& solver, const Word& w, std::uint64_t step_cap) {
  auto machine = solver.make(w);
  RunRecord rec = drive(*machine, step_cap);
  Observation obs{rec.steps, false, false};
  if (const auto* par = machine->parallel_outcome()) {
    obs.undecided = par->partial.status == StepStatus::UndecidedFinal;
    if (par->partial.decided()) {
      std::uint64_t bound = 2 * std::min(par->total.steps, par->partial.steps) + 2;
      obs.contract_violated = rec.steps > bound;
    } else {
      obs.contract_violated =
          rec.steps > par->total.steps + par->partial.steps + 2;
    }
  } else {
    obs.undecided = rec.status == StepStatus::UndecidedFinal;
  }
  return obs;
}

}  // namespace

Solver configured_solver(const Pipeline& pipeline, MachineSel machine,
                         const std::optional<ComplexityBound>& forced_total) {
  Solver total = pipeline.total;
  if (forced_total) total = with_forced_cost(total, *forced_total);
  switch (machine) {
    case MachineSel::TotalOnly:
      return total;
    case MachineSel::FilterOnly:
      if (!pipeline.filter)
        throw std::invalid_argument("pipeline has no filter: " + pipeline.name);
      return *pipeline.filter;
    case MachineSel::Combined:
      if (!pipeline.filter) return total;
      return parallel_combine(total, *pipeline.filter);
  }
  throw std::logic_error("unreachable");
}

const ComplexityBound& default_bound(const Pipeline& pipeline, MachineSel machine) {
  return machine == MachineSel::TotalOnly ? pipeline.total_bound
                                          : pipeline.combined_bound;
}

ResultTable avg_time_profile(const Pipeline& pipeline, const ProfileConfig& config) {
  if (config.lengths.empty())
    throw std::invalid_argument("profile needs at least one length");
  for (std::size_t i = 1; i < config.lengths.size(); ++i) {
    if (config.lengths[i] < config.lengths[i - 1])
      throw std::invalid_argument("profile lengths must be non-decreasing");
  }
  if (config.samples == 0) throw std::invalid_argument("samples must be positive");

  Solver solver = configured_solver(pipeline, config.machine, config.forced_total);
  ComplexityBound f1 =
      config.f1 ? *config.f1 : default_bound(pipeline, config.machine);

  ResultTable table;
  table.f1_spec = f1.spec();
  table.metadata = {
      {"version", "0.1.0"},
      {"pipeline", pipeline.name},
      {"solver", solver.name},
      {"machine", config.machine == MachineSel::Combined     ? "combined"
                  : config.machine == MachineSel::TotalOnly ? "total"
                                                            : "filter"},
      {"f1", f1.spec()},
      {"seed", std::to_string(config.seed)},
      {"samples", std::to_string(config.samples)},
      {"universe",
       config.universe == Universe::AllWords ? "all" : "reduced"},
      {"enum_cutoff", std::to_string(config.enum_cutoff)},
      {"forced",
       config.forced_total ? config.forced_total->spec() : "none"},
  };

  for (std::size_t row_index = 0; row_index < config.lengths.size(); ++row_index) {
    std::size_t n = config.lengths[row_index];
    RunningStats stats;
    std::uint64_t cap_failures = 0;
    bool exact = config.prefer_exact &&
                 slice_count(pipeline.alphabet, config.universe, n) <=
                     BigInt(config.enum_cutoff);
    auto feed = [&](const Word& w) {
      try {
        Observation obs = observe(solver, w, config.step_cap);
        stats.add(obs.steps, obs.undecided);
        if (obs.contract_violated) ++table.contract_violations;
      } catch (const StepCapExceeded&) {
        ++cap_failures;
      }
    };
    if (exact) {
      enumerate_words(pipeline.alphabet, config.universe, n, config.enum_cutoff, feed);
    } else {
      Rng rng = Rng::derive(config.seed, row_index);
      for (std::uint64_t s = 0; s < config.samples; ++s)
        feed(sample_word(pipeline.alphabet, config.universe, n, rng));
    }
    ResultRow row;
    row.n = n;
    row.samples = stats.count;
    row.exact = exact;
    row.mean_t = stats.mean();
    row.se = exact ? 0 : stats.se();
    row.ci_half = kZ99 * row.se;
    row.max_t = stats.max;
    row.undecided_frac =
        stats.count ? static_cast<double>(stats.undecided) / static_cast<double>(stats.count) : 0;
    row.f1_value = f1.evald(n);
    row.ratio = row.mean_t / row.f1_value;
    row.cap_failures = cap_failures;
    table.rows.push_back(row);
  }
  return table;
}

double uniform_bound_metric(const ResultTable& table) {
  if (table.rows.empty()) throw std::invalid_argument("empty result table");
  double sup = 0;
  for (const auto& row : table.rows) sup = std::max(sup, row.ratio);
  return sup;
}

WeightedSum family_weighted_sum(const ResultTable& table,
                                const LengthDistribution& dist) {
  WeightedSum ws;
  double var = 0;
  for (const auto& row : table.rows) {
    double w = dist.d(row.n);
    ws.value += w * row.ratio;
    ws.covered_mass += w;
    double se_ratio = row.se / row.f1_value;
    var += w * w * se_ratio * se_ratio;
  }
  ws.ci_half = kZ99 * std::sqrt(var);
  return ws;
}

namespace {

struct IntegralPass {
  double value = 0;
  double ci_half = 0;
  std::uint64_t tail_samples = 0;
  std::size_t exact_head = 0;
};

IntegralPass integral_pass(const Alphabet& alphabet, const Solver& solver,
                           const LengthDistribution& dist,
                           const ComplexityBound& f1, std::uint64_t samples,
                           std::uint64_t seed, Universe universe,
                           std::uint64_t enum_cutoff, std::uint64_t step_cap) {
  IntegralPass pass;
  std::size_t n_max = dist.n_max();
  double head_value = 0, head_mass = 0;
  std::size_t head_end = 0;  // exclusive
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (slice_count(alphabet, universe, n) > BigInt(enum_cutoff)) break;
    head_end = n + 1;
    double dn = dist.d(n);
    if (dn == 0) continue;
    double sum = 0;
    std::uint64_t count = 0;
    enumerate_words(alphabet, universe, n, enum_cutoff, [&](const Word& w) {
      RunRecord rec = run(solver, w, step_cap);
      sum += static_cast<double>(rec.steps) / f1.evald(n);
      ++count;
    });
    head_value += dn * (sum / static_cast<double>(count));
    head_mass += dn;
  }
  pass.exact_head = head_end == 0 ? 0 : head_end - 1;
  pass.value = head_value;

  double tail_mass = 0;
  for (std::size_t n = head_end; n <= n_max; ++n) tail_mass += dist.d(n);
  if (tail_mass > 1e-15 && samples > 0) {
    // conditional CDF over the tail lengths
    std::vector<double> cdf;
    std::vector<std::size_t> lens;
    double acc = 0;
    for (std::size_t n = head_end; n <= n_max; ++n) {
      double dn = dist.d(n);
      if (dn <= 0) continue;
      acc += dn / tail_mass;
      cdf.push_back(acc);
      lens.push_back(n);
    }
    if (!cdf.empty()) cdf.back() = 1.0;
    Rng rng(seed);
    double sum = 0, sum_sq = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
      double u = rng.unit();
      std::size_t idx = static_cast<std::size_t>(
          std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
      if (idx >= lens.size()) idx = lens.size() - 1;
      std::size_t n = lens[idx];
      Word w = sample_word(alphabet, universe, n, rng);
      RunRecord rec = run(solver, w, step_cap);
      double x = static_cast<double>(rec.steps) / f1.evald(n);
      sum += x;
      sum_sq += x * x;
    }
    double mean = sum / static_cast<double>(samples);
    double var = samples > 1
                     ? (sum_sq - sum * sum / static_cast<double>(samples)) /
                           static_cast<double>(samples - 1)
                     : 0;
    pass.value += tail_mass * mean;
    pass.ci_half =
        kZ99 * tail_mass * (var > 0 ? std::sqrt(var / static_cast<double>(samples)) : 0);
    pass.tail_samples = samples;
  }
  return pass;
}

}  // namespace

IntegralReport integral_estimate(const Alphabet& alphabet, const Solver& solver,
                                 const LengthDistribution& dist,
                                 const ComplexityBound& f1,
                                 std::uint64_t samples, std::uint64_t seed,
                                 Universe universe, std::uint64_t enum_cutoff,
                                 std::uint64_t step_cap,
                                 double divergence_threshold) {
  IntegralReport rep;
  rep.truncation = dist.n_max();
  IntegralPass full = integral_pass(alphabet, solver, dist, f1, samples, seed,
                                    universe, enum_cutoff, step_cap);
  rep.value = full.value;
  rep.ci_half = full.ci_half;
  rep.tail_samples = full.tail_samples;
  rep.exact_head = full.exact_head;
  if (dist.n_max() >= 2) {
    LengthDistribution half = dist.truncated(dist.n_max() / 2);
    IntegralPass hp = integral_pass(alphabet, solver, half, f1, samples,
                                    seed + 1, universe, enum_cutoff, step_cap);
    rep.value_half = hp.value;
    if (hp.value > 0) {
      rep.growth = rep.value / hp.value - 1.0;
      rep.divergence_flag = rep.growth > divergence_threshold;
    }
  }
  return rep;
}

CauchyCheckReport cauchy_average_check(const Alphabet& alphabet,
                                       const Solver& solver, double degree_m,
                                       double epsilon, std::size_t n_limit,
                                       std::uint64_t samples_per_length,
                                       std::uint64_t seed, Universe universe,
                                       std::uint64_t enum_cutoff,
                                       std::uint64_t step_cap) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (n_limit < 2) throw std::invalid_argument("n_limit too small");
  CauchyCheckReport rep;
  rep.degree_m = degree_m;
  rep.epsilon = epsilon;
  constexpr double kPi = 3.14159265358979323846;
  const double norm = 6.0 / (kPi * kPi);
  double sum = 0;
  std::size_t half = n_limit / 2;
  for (std::size_t n = 1; n <= n_limit; ++n) {
    double mean_t;
    bool exact = slice_count(alphabet, universe, n) <= BigInt(enum_cutoff);
    if (exact) {
      double acc = 0;
      std::uint64_t count = 0;
      enumerate_words(alphabet, universe, n, enum_cutoff, [&](const Word& w) {
        acc += static_cast<double>(run(solver, w, step_cap).steps);
        ++count;
      });
      mean_t = acc / static_cast<double>(count);
    } else {
      Rng rng = Rng::derive(seed, n);
      double acc = 0;
      for (std::uint64_t s = 0; s < samples_per_length; ++s) {
        Word w = sample_word(alphabet, universe, n, rng);
        acc += static_cast<double>(run(solver, w, step_cap).steps);
      }
      mean_t = acc / static_cast<double>(samples_per_length);
    }
    double nn = static_cast<double>(n);
    sum += norm / (nn * nn) * mean_t / std::pow(nn, degree_m - 1.0 + epsilon);
    if ((n & (n - 1)) == 0 || n == n_limit) rep.checkpoints.push_back({n, sum});
    if (n == half) rep.sum_at_half = sum;
    if (n == n_limit) rep.sum_at_full = sum;
  }
  rep.increment_ratio =
      rep.sum_at_half > 0 ? rep.sum_at_full / rep.sum_at_half - 1.0 : 0.0;
  return rep;
}

GenericDecayReport generic_density_experiment(const Alphabet& alphabet,
                                              const Solver& filter,
                                              const std::vector<std::size_t>& lengths,
                                              std::uint64_t samples,
                                              std::uint64_t seed,
                                              Universe universe,
                                              std::uint64_t enum_cutoff,
                                              std::uint64_t step_cap) {
  GenericDecayReport rep;
  std::vector<std::pair<double, double>> residuals;
  for (std::size_t row_index = 0; row_index < lengths.size(); ++row_index) {
    std::size_t n = lengths[row_index];
    std::uint64_t undecided = 0, count = 0;
    bool exact = slice_count(alphabet, universe, n) <= BigInt(enum_cutoff);
    auto feed = [&](const Word& w) {
      auto machine = filter.make(w);
      RunRecord rec = drive(*machine, step_cap);
      if (rec.status == StepStatus::UndecidedFinal) ++undecided;
      ++count;
    };
    if (exact) {
      enumerate_words(alphabet, universe, n, enum_cutoff, feed);
    } else {
      Rng rng = Rng::derive(seed, row_index);
      for (std::uint64_t s = 0; s < samples; ++s)
        feed(sample_word(alphabet, universe, n, rng));
    }
    GenericDecayRow row;
    row.n = n;
    row.samples = count;
    row.exact = exact;
    row.undecided = count ? static_cast<double>(undecided) / static_cast<double>(count) : 0;
    rep.rows.push_back(row);
    residuals.push_back({static_cast<double>(n), row.undecided});
  }
  std::size_t positive = 0;
  for (const auto& [n, u] : residuals)
    if (u > 0) ++positive;
  if (positive >= 3) rep.fit = exp_fit(residuals);
  return rep;
}

std::string to_csv(const ResultTable& table) {
  std::string out = "n,samples,mean_T,ci_half,max_T,undecided_frac,ratio\n";
  for (const auto& r : table.rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.samples) + "," +
           fmt_double(r.mean_t) + "," + fmt_double(r.ci_half) + "," +
           std::to_string(r.max_t) + "," + fmt_double(r.undecided_frac) + "," +
           fmt_double(r.ratio) + "\n";
  }
  return out;
}

std::string to_json(const ResultTable& table) {
  nlohmann::json j;
  for (const auto& [key, value] : table.metadata) j["metadata"][key] = value;
  j["metadata"]["f1"] = table.f1_spec;
  j["contract_violations"] = table.contract_violations;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : table.rows) {
    j["rows"].push_back({{"n", r.n},
                         {"samples", r.samples},
                         {"exact", r.exact},
                         {"mean_T", r.mean_t},
                         {"ci_half", r.ci_half},
                         {"max_T", r.max_t},
                         {"undecided_frac", r.undecided_frac},
                         {"ratio", r.ratio},
                         {"cap_failures", r.cap_failures}});
  }
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace gencase
