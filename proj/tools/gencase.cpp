// Command-line front end: solving single words, average-time and
// generic-decay benchmarks, density estimates, random-walk tables,
// membership queries and small-cancellation verification.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gencase/analytics.hpp"
#include "gencase/harness.hpp"
#include "gencase/measure.hpp"
#include "gencase/membership.hpp"
#include "gencase/pipeline.hpp"
#include "gencase/presentation.hpp"

namespace {

using namespace gencase;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad value in $") + name + ": " + v);
  }
}

std::vector<std::size_t> parse_lengths(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t dots = tok.find("..");
    if (dots == std::string::npos) {
      out.push_back(std::stoul(tok));
      continue;
    }
    std::size_t lo = std::stoul(tok.substr(0, dots));
    std::string rest = tok.substr(dots + 2);
    std::size_t step = 1;
    std::size_t dots2 = rest.find("..");
    std::size_t hi;
    if (dots2 == std::string::npos) {
      hi = std::stoul(rest);
    } else {
      hi = std::stoul(rest.substr(0, dots2));
      step = std::stoul(rest.substr(dots2 + 2));
      if (step == 0) throw std::invalid_argument("length step must be positive");
    }
    for (std::size_t n = lo; n <= hi; n += step) out.push_back(n);
  }
  if (out.empty()) throw std::invalid_argument("empty length list: " + text);
  return out;
}

MachineSel parse_machine(const std::string& m) {
  if (m == "combined") return MachineSel::Combined;
  if (m == "total") return MachineSel::TotalOnly;
  if (m == "filter") return MachineSel::FilterOnly;
  throw std::invalid_argument("unknown machine selector: " + m);
}

Universe parse_universe(const std::string& u) {
  if (u == "all") return Universe::AllWords;
  if (u == "reduced") return Universe::ReducedWords;
  throw std::invalid_argument("unknown universe: " + u);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Flat JSON config: values fill in options the command line left unset.
class ConfigFile {
 public:
  void load(const std::string& path) { json_ = nlohmann::json::parse(read_file(path)); }

  template <typename T>
  void fill(const CLI::Option* opt, const char* key, T* out) const {
    if (json_.is_null() || opt->count() > 0 || !json_.contains(key)) return;
    const auto& v = json_.at(key);
    if constexpr (std::is_same_v<T, std::string>) {
      *out = v.is_string() ? v.get<std::string>() : v.dump();
    } else if constexpr (std::is_same_v<T, bool>) {
      *out = v.get<bool>();
    } else if constexpr (std::is_floating_point_v<T>) {
      *out = v.is_string() ? std::stod(v.get<std::string>()) : v.get<double>();
    } else {
      *out = v.is_string() ? static_cast<T>(std::stoull(v.get<std::string>()))
                           : v.get<T>();
    }
  }

 private:
  nlohmann::json json_;
};

const char* answer_name(Answer a) {
  return a == Answer::InLanguage ? "InLanguage" : "NotInLanguage";
}

void print_table(const ResultTable& table) {
  std::fputs("n,samples,mean_T,ci_half,max_T,undecided_frac,ratio\n", stdout);
  std::string csv = to_csv(table);
  std::size_t first_newline = csv.find('\n');
  std::fputs(csv.c_str() + first_newline + 1, stdout);
}

void write_outputs(const ResultTable& table, const std::string& prefix) {
  if (prefix.empty()) return;
  write_text_file(prefix + ".csv", to_csv(table));
  write_text_file(prefix + ".json", to_json(table));
  std::printf("wrote %s.csv and %s.json\n", prefix.c_str(), prefix.c_str());
}

int cmd_solve(const std::string& pipeline_spec, const std::string& word_text,
              const std::string& machine, const std::string& force,
              std::uint64_t step_cap) {
  Pipeline p = make_pipeline(pipeline_spec);
  std::optional<ComplexityBound> forced;
  if (!force.empty()) forced = parse_bound_spec(force);
  Solver solver = configured_solver(p, parse_machine(machine), forced);
  Word w = p.parse_input(word_text);
  auto m = solver.make(w);
  RunRecord rec = drive(*m, step_cap);
  if (rec.status == StepStatus::UndecidedFinal) {
    std::printf("answer=Undecided T=%llu\n",
                static_cast<unsigned long long>(rec.steps));
  } else {
    std::printf("answer=%s T=%llu\n", answer_name(rec.answer),
                static_cast<unsigned long long>(rec.steps));
  }
  if (const auto* par = m->parallel_outcome()) {
    std::printf("total: answer=%s T=%llu\n", answer_name(par->total.answer),
                static_cast<unsigned long long>(par->total.steps));
    if (par->partial.decided()) {
      std::printf("filter: answer=%s T=%llu\n", answer_name(par->partial.answer),
                  static_cast<unsigned long long>(par->partial.steps));
    } else {
      std::printf("filter: undecided T=%llu\n",
                  static_cast<unsigned long long>(par->partial.steps));
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group word/membership decision pipelines and measurement harness"};
  app.require_subcommand(1);

  std::uint64_t default_cutoff = 1u << 16;
  std::uint64_t default_step_cap = kDefaultStepCap;

  try {
    default_cutoff = env_u64("GENCASE_ENUM_CUTOFF", default_cutoff);
    default_step_cap = env_u64("GENCASE_STEP_CAP", default_step_cap);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "decide one word and report T");
  std::string s_pipeline, s_word, s_machine = "combined", s_force, s_config;
  solve->add_option("--pipeline", s_pipeline, "pipeline spec");
  solve->add_option("--word", s_word, "input word");
  auto* s_machine_opt = solve->add_option("--machine", s_machine, "combined|total|filter");
  auto* s_force_opt = solve->add_option("--force", s_force, "forced total bound, e.g. quad:1");
  solve->add_option("--config", s_config, "flat JSON config file");

  // ---- bench-avg ----
  auto* bench = app.add_subcommand("bench-avg", "per-length average time profile");
  std::string b_pipeline, b_lengths = "8,16,32,64", b_f1, b_machine = "combined";
  std::string b_force, b_universe = "all", b_out, b_config, b_cauchy;
  std::vector<std::string> b_measures;
  std::uint64_t b_samples = 1000, b_seed = 1, b_cutoff = default_cutoff;
  std::uint64_t b_step_cap = default_step_cap, b_int_samples = 20000;
  std::size_t b_truncation = 256;
  bool b_integral = false;
  bench->add_option("--pipeline", b_pipeline, "pipeline spec");
  auto* b_lengths_opt = bench->add_option("--lengths", b_lengths, "e.g. 32,64,128 or 1..256");
  auto* b_samples_opt = bench->add_option("--samples", b_samples, "samples per length");
  auto* b_seed_opt = bench->add_option("--seed", b_seed, "random seed");
  auto* b_f1_opt = bench->add_option("--f1", b_f1, "normalizing bound, e.g. lin, quad:2");
  auto* b_machine_opt = bench->add_option("--machine", b_machine, "combined|total|filter");
  auto* b_force_opt = bench->add_option("--force", b_force, "forced total bound");
  auto* b_universe_opt = bench->add_option("--universe", b_universe, "all|reduced");
  auto* b_measure_opt = bench->add_option("--measure", b_measures,
                                          "measure specs for weighted family sums");
  auto* b_integral_opt = bench->add_flag("--integral", b_integral,
                                         "also run integral estimates per measure");
  auto* b_int_samples_opt =
      bench->add_option("--integral-samples", b_int_samples, "tail samples");
  auto* b_trunc_opt = bench->add_option("--truncation", b_truncation,
                                        "measure truncation for integrals");
  auto* b_cauchy_opt = bench->add_option(
      "--cauchy-check", b_cauchy, "run the Cauchy partial-sum check, format m:eps");
  auto* b_cutoff_opt = bench->add_option("--enum-cutoff", b_cutoff, "exact-row cutoff");
  auto* b_cap_opt = bench->add_option("--step-cap", b_step_cap, "hard step cap");
  auto* b_out_opt = bench->add_option("--out", b_out, "output path prefix");
  bench->add_option("--config", b_config, "flat JSON config file");

  // ---- bench-generic ----
  auto* gen = app.add_subcommand("bench-generic", "filter undecided-fraction decay");
  std::string g_pipeline, g_lengths = "4,8,12,16,24,32,48,64", g_universe = "all";
  std::string g_out, g_config;
  std::uint64_t g_samples = 1000, g_seed = 1, g_cutoff = default_cutoff;
  std::uint64_t g_step_cap = default_step_cap;
  gen->add_option("--pipeline", g_pipeline, "pipeline spec");
  auto* g_lengths_opt = gen->add_option("--lengths", g_lengths, "length list");
  auto* g_samples_opt = gen->add_option("--samples", g_samples, "samples per length");
  auto* g_seed_opt = gen->add_option("--seed", g_seed, "random seed");
  auto* g_universe_opt = gen->add_option("--universe", g_universe, "all|reduced");
  auto* g_cutoff_opt = gen->add_option("--enum-cutoff", g_cutoff, "exact-row cutoff");
  auto* g_cap_opt = gen->add_option("--step-cap", g_step_cap, "hard step cap");
  auto* g_out_opt = gen->add_option("--out", g_out, "output path prefix");
  gen->add_option("--config", g_config, "flat JSON config file");

  // ---- density ----
  auto* dens = app.add_subcommand("density", "asymptotic density of a predicate");
  std::string d_pipeline, d_predicate = "wp", d_mode = "exact", d_scope = "ball";
  std::string d_universe = "all", d_config;
  std::size_t d_n = 4;
  std::uint64_t d_samples = 100000, d_seed = 1, d_budget = 1u << 26;
  dens->add_option("--pipeline", d_pipeline, "pipeline spec");
  auto* d_pred_opt = dens->add_option("--predicate", d_predicate, "wp|undecided");
  auto* d_n_opt = dens->add_option("--n", d_n, "ball radius / length");
  auto* d_mode_opt = dens->add_option("--mode", d_mode, "exact|mc");
  auto* d_samples_opt = dens->add_option("--samples", d_samples, "MC samples");
  auto* d_seed_opt = dens->add_option("--seed", d_seed, "random seed");
  auto* d_scope_opt = dens->add_option("--scope", d_scope, "ball|slice");
  auto* d_universe_opt = dens->add_option("--universe", d_universe, "all|reduced");
  auto* d_budget_opt = dens->add_option("--budget", d_budget, "enumeration budget");
  dens->add_option("--config", d_config, "flat JSON config file");

  // ---- walk ----
  auto* walk = app.add_subcommand("walk", "random-walk return probabilities");
  std::string w_graph = "f2", w_method = "dp", w_config;
  std::size_t w_steps = 24;
  std::uint64_t w_trials = 100000, w_seed = 1;
  walk->add_option("--graph", w_graph, "f2|free:g|z|schreier:<subgroup file>");
  auto* w_steps_opt = walk->add_option("--steps", w_steps, "even time horizon 2n");
  auto* w_method_opt = walk->add_option("--method", w_method, "dp|mc");
  auto* w_trials_opt = walk->add_option("--trials", w_trials, "MC trials");
  auto* w_seed_opt = walk->add_option("--seed", w_seed, "random seed");
  walk->add_option("--config", w_config, "flat JSON config file");

  // ---- membership ----
  auto* memb = app.add_subcommand("membership", "subgroup membership queries");
  std::string m_subgroup, m_word, m_config;
  memb->add_option("--subgroup", m_subgroup, "subgroup file (one generator per line)");
  memb->add_option("--word", m_word, "word to test");
  memb->add_option("--config", m_config, "flat JSON config file");

  // ---- verify-sc ----
  auto* sc = app.add_subcommand("verify-sc", "metric small-cancellation check");
  std::string c_presentation, c_config;
  double c_lambda = 1.0 / 6.0;
  sc->add_option("--presentation", c_presentation, "presentation file");
  auto* c_lambda_opt = sc->add_option("--lambda", c_lambda, "metric parameter");
  sc->add_option("--config", c_config, "flat JSON config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (solve->parsed()) {
      ConfigFile cfg;
      if (!s_config.empty()) cfg.load(s_config);
      cfg.fill(s_machine_opt, "machine", &s_machine);
      cfg.fill(s_force_opt, "force", &s_force);
      if (s_pipeline.empty()) throw std::invalid_argument("--pipeline is required");
      if (s_word.empty() && solve->get_option("--word")->count() == 0)
        throw std::invalid_argument("--word is required");
      return cmd_solve(s_pipeline, s_word, s_machine, s_force, default_step_cap);
    }

    if (bench->parsed()) {
      ConfigFile cfg;
      if (!b_config.empty()) cfg.load(b_config);
      cfg.fill(b_lengths_opt, "lengths", &b_lengths);
      cfg.fill(b_samples_opt, "samples", &b_samples);
      cfg.fill(b_seed_opt, "seed", &b_seed);
      cfg.fill(b_f1_opt, "f1", &b_f1);
      cfg.fill(b_machine_opt, "machine", &b_machine);
      cfg.fill(b_force_opt, "force", &b_force);
      cfg.fill(b_universe_opt, "universe", &b_universe);
      cfg.fill(b_integral_opt, "integral", &b_integral);
      cfg.fill(b_int_samples_opt, "integral-samples", &b_int_samples);
      cfg.fill(b_trunc_opt, "truncation", &b_truncation);
      cfg.fill(b_cauchy_opt, "cauchy-check", &b_cauchy);
      cfg.fill(b_cutoff_opt, "enum-cutoff", &b_cutoff);
      cfg.fill(b_cap_opt, "step-cap", &b_step_cap);
      cfg.fill(b_out_opt, "out", &b_out);
      if (b_pipeline.empty()) throw std::invalid_argument("--pipeline is required");
      if (b_measures.empty())
        throw std::invalid_argument(
            "bench-avg needs at least one --measure spec "
            "(e.g. cauchy, geom:0.9, uniform:1:256)");

      Pipeline p = make_pipeline(b_pipeline);
      ProfileConfig config;
      config.lengths = parse_lengths(b_lengths);
      config.samples = b_samples;
      config.seed = b_seed;
      if (!b_f1.empty()) config.f1 = parse_bound_spec(b_f1);
      config.machine = parse_machine(b_machine);
      if (!b_force.empty()) config.forced_total = parse_bound_spec(b_force);
      config.universe = parse_universe(b_universe);
      config.enum_cutoff = b_cutoff;
      config.step_cap = b_step_cap;

      ResultTable table = avg_time_profile(p, config);
      print_table(table);
      double sup = uniform_bound_metric(table);
      std::printf("uniform_bound_metric=%.6g contract_violations=%llu\n", sup,
                  static_cast<unsigned long long>(table.contract_violations));

      Solver solver = configured_solver(p, config.machine, config.forced_total);
      ComplexityBound f1 =
          config.f1 ? *config.f1 : default_bound(p, config.machine);
      for (const std::string& mspec : b_measures) {
        LengthInvariantMeasure mu =
            parse_measure_spec(p.alphabet, mspec, b_truncation);
        WeightedSum ws = family_weighted_sum(table, mu.distribution());
        std::printf("measure %s: weighted_sum=%.6g (mass on rows %.4g) <= sup %.6g : %s\n",
                    mspec.c_str(), ws.value, ws.covered_mass, sup,
                    ws.value <= sup + 1e-12 ? "ok" : "VIOLATED");
        if (b_integral) {
          IntegralReport rep = integral_estimate(
              p.alphabet, solver, mu.distribution(), f1, b_int_samples, b_seed,
              mu.universe(), b_cutoff, b_step_cap);
          std::printf(
              "  integral=%.6g ci=%.3g half=%.6g growth=%.3g divergence=%s\n",
              rep.value, rep.ci_half, rep.value_half, rep.growth,
              rep.divergence_flag ? "yes" : "no");
        }
      }
      if (!b_cauchy.empty()) {
        auto colon = b_cauchy.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("--cauchy-check wants m:eps");
        double m = std::stod(b_cauchy.substr(0, colon));
        double eps = std::stod(b_cauchy.substr(colon + 1));
        CauchyCheckReport rep = cauchy_average_check(
            p.alphabet, solver, m, eps, b_truncation, std::max<std::uint64_t>(b_samples / 4, 50),
            b_seed, config.universe, b_cutoff, b_step_cap);
        std::printf("cauchy-check m=%g eps=%g sum(%zu)=%.6g sum(%zu)=%.6g increment=%.4g\n",
                    m, eps, b_truncation / 2, rep.sum_at_half, b_truncation,
                    rep.sum_at_full, rep.increment_ratio);
      }
      write_outputs(table, b_out);
      return kExitOk;
    }

    if (gen->parsed()) {
      ConfigFile cfg;
      if (!g_config.empty()) cfg.load(g_config);
      cfg.fill(g_lengths_opt, "lengths", &g_lengths);
      cfg.fill(g_samples_opt, "samples", &g_samples);
      cfg.fill(g_seed_opt, "seed", &g_seed);
      cfg.fill(g_universe_opt, "universe", &g_universe);
      cfg.fill(g_cutoff_opt, "enum-cutoff", &g_cutoff);
      cfg.fill(g_cap_opt, "step-cap", &g_step_cap);
      cfg.fill(g_out_opt, "out", &g_out);
      if (g_pipeline.empty()) throw std::invalid_argument("--pipeline is required");

      Pipeline p = make_pipeline(g_pipeline);
      if (!p.filter) throw std::invalid_argument("pipeline has no filter: " + p.name);
      GenericDecayReport rep = generic_density_experiment(
          p.alphabet, *p.filter, parse_lengths(g_lengths), g_samples, g_seed,
          parse_universe(g_universe), g_cutoff, g_step_cap);
      std::fputs("n,samples,undecided_frac,exact\n", stdout);
      for (const auto& row : rep.rows) {
        std::printf("%zu,%llu,%.12g,%d\n", row.n,
                    static_cast<unsigned long long>(row.samples), row.undecided,
                    row.exact ? 1 : 0);
      }
      if (rep.fit) {
        std::printf("fit: sigma=%.6g C=%.6g R2=%.4f points=%zu exponential=%s\n",
                    rep.fit->sigma_hat, rep.fit->c_hat, rep.fit->r_squared,
                    rep.fit->points_used, rep.fit->exponential ? "yes" : "no");
      } else {
        std::fputs("fit: not enough positive residuals\n", stdout);
      }
      if (!g_out.empty()) {
        std::string csv = "n,samples,undecided_frac,exact\n";
        nlohmann::json j;
        j["pipeline"] = g_pipeline;
        j["seed"] = g_seed;
        j["rows"] = nlohmann::json::array();
        for (const auto& row : rep.rows) {
          char buf[128];
          std::snprintf(buf, sizeof(buf), "%zu,%llu,%.12g,%d\n", row.n,
                        static_cast<unsigned long long>(row.samples),
                        row.undecided, row.exact ? 1 : 0);
          csv += buf;
          j["rows"].push_back({{"n", row.n},
                               {"samples", row.samples},
                               {"undecided_frac", row.undecided},
                               {"exact", row.exact}});
        }
        if (rep.fit) {
          j["fit"] = {{"sigma", rep.fit->sigma_hat},
                      {"C", rep.fit->c_hat},
                      {"r_squared", rep.fit->r_squared},
                      {"points", rep.fit->points_used},
                      {"exponential", rep.fit->exponential}};
        }
        write_text_file(g_out + ".csv", csv);
        write_text_file(g_out + ".json", j.dump(2) + "\n");
        std::printf("wrote %s.csv and %s.json\n", g_out.c_str(), g_out.c_str());
      }
      return kExitOk;
    }

    if (dens->parsed()) {
      ConfigFile cfg;
      if (!d_config.empty()) cfg.load(d_config);
      cfg.fill(d_pred_opt, "predicate", &d_predicate);
      cfg.fill(d_n_opt, "n", &d_n);
      cfg.fill(d_mode_opt, "mode", &d_mode);
      cfg.fill(d_samples_opt, "samples", &d_samples);
      cfg.fill(d_seed_opt, "seed", &d_seed);
      cfg.fill(d_scope_opt, "scope", &d_scope);
      cfg.fill(d_universe_opt, "universe", &d_universe);
      cfg.fill(d_budget_opt, "budget", &d_budget);
      if (d_pipeline.empty()) throw std::invalid_argument("--pipeline is required");

      Pipeline p = make_pipeline(d_pipeline);
      WordPredicate pred;
      if (d_predicate == "wp" || d_predicate == "member") {
        Solver solver = p.combined;
        pred = [solver](const Word& w) {
          return run(solver, w).answer == Answer::InLanguage;
        };
      } else if (d_predicate == "undecided" || d_predicate == "filter-undecided") {
        if (!p.filter) throw std::invalid_argument("pipeline has no filter");
        Solver filter = *p.filter;
        pred = [filter](const Word& w) {
          return run(filter, w).status == StepStatus::UndecidedFinal;
        };
      } else {
        throw std::invalid_argument("unknown predicate: " + d_predicate);
      }
      DensityScope scope =
          d_scope == "slice" ? DensityScope::Slice : DensityScope::Ball;
      Universe universe = parse_universe(d_universe);
      DensityEstimate est;
      if (d_mode == "exact") {
        est = density_exact(pred, p.alphabet, universe, d_n, scope, d_budget);
        std::printf("rho_%zu=%llu/%llu=%.12g (exact)\n", est.n,
                    static_cast<unsigned long long>(est.numerator),
                    static_cast<unsigned long long>(est.denominator), est.value);
      } else if (d_mode == "mc") {
        est = density_mc(pred, p.alphabet, universe, d_n, d_samples, d_seed, scope);
        std::printf("rho_%zu=%.12g ci=%.3g (mc, %llu samples)\n", est.n, est.value,
                    est.ci_half, static_cast<unsigned long long>(est.samples));
      } else {
        throw std::invalid_argument("unknown mode: " + d_mode);
      }
      return kExitOk;
    }

    if (walk->parsed()) {
      ConfigFile cfg;
      if (!w_config.empty()) cfg.load(w_config);
      cfg.fill(w_steps_opt, "steps", &w_steps);
      cfg.fill(w_method_opt, "method", &w_method);
      cfg.fill(w_trials_opt, "trials", &w_trials);
      cfg.fill(w_seed_opt, "seed", &w_seed);
      if (w_steps == 0 || w_steps % 2 != 0)
        throw std::invalid_argument("--steps must be a positive even number");

      WalkGraphSpec spec;
      if (w_graph == "f2") {
        spec = WalkGraphSpec::free_cayley(2);
      } else if (w_graph.rfind("free:", 0) == 0) {
        spec = WalkGraphSpec::free_cayley(std::stoul(w_graph.substr(5)));
      } else if (w_graph == "z") {
        spec = WalkGraphSpec::line();
      } else if (w_graph.rfind("schreier:", 0) == 0) {
        Alphabet f2({"a", "b"});
        auto gens = parse_subgroup(f2, read_file(w_graph.substr(9)));
        spec = WalkGraphSpec::schreier(stallings_core(f2, gens));
      } else {
        throw std::invalid_argument("unknown graph spec: " + w_graph);
      }
      std::size_t n = w_steps / 2;
      SpectralTable table = w_method == "mc"
                                ? spectral_mc(spec, n, w_trials, w_seed)
                                : spectral_dp(spec, n);
      std::fputs("t,p_2t\n", stdout);
      for (std::size_t t = 0; t < table.p_even_value.size(); ++t)
        std::printf("%zu,%.12g\n", 2 * t, table.p_even_value[t]);
      std::printf("tail_ratio=%.6g corrected_ratio=%.6g rho_hat=%.6g (%s)\n",
                  table.tail_ratio, table.corrected_ratio, table.rho_hat,
                  table.exact ? "exact dp" : "monte carlo");
      return kExitOk;
    }

    if (memb->parsed()) {
      if (m_subgroup.empty()) throw std::invalid_argument("--subgroup is required");
      Alphabet f2({"a", "b"});
      auto gens = parse_subgroup(f2, read_file(m_subgroup));
      CoreGraph core = stallings_core(f2, gens);
      std::printf("core: %zu vertices\n", core.vertex_count());
      if (memb->get_option("--word")->count() > 0) {
        Word w = parse_word(f2, m_word);
        Answer trace = membership_trace(core, w);
        WalkResult wr = schreier_walk(core, w);
        std::printf("trace=%s walk=%s agree=%s\n",
                    trace == Answer::InLanguage ? "Member" : "NonMember",
                    wr.answer == Answer::InLanguage ? "Member" : "NonMember",
                    trace == wr.answer ? "yes" : "NO");
      }
      return kExitOk;
    }

    if (sc->parsed()) {
      ConfigFile cfg;
      if (!c_config.empty()) cfg.load(c_config);
      cfg.fill(c_lambda_opt, "lambda", &c_lambda);
      if (c_presentation.empty())
        throw std::invalid_argument("--presentation is required");
      Presentation pres = parse_presentation(read_file(c_presentation));
      MetricConditionReport rep = verify_metric_condition(pres, c_lambda);
      std::printf("max_piece=%zu min_relator=%zu lambda=%.6g %s\n",
                  rep.max_piece_length, rep.min_relator_length, rep.lambda,
                  rep.passes ? "PASS" : "FAIL");
      return kExitOk;
    }
  } catch (const EnumerationBudgetError& e) {
    std::fprintf(stderr, "budget error: %s\n", e.what());
    return kExitBudget;
  } catch (const StepCapExceeded& e) {
    std::fprintf(stderr, "step-cap error: %s\n", e.what());
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitOk;
}
