#include "gencase/solver.hpp"

#include <algorithm>
#include <cmath>

namespace gencase {

RunRecord drive(StepMachine& machine, std::uint64_t step_cap) {
  std::uint64_t taken = 0;
  while (machine.status() == StepStatus::Running) {
    if (taken >= step_cap)
      throw StepCapExceeded("step cap " + std::to_string(step_cap) + " exceeded");
    machine.step();
    ++taken;
  }
  RunRecord rec = machine.final_record();
  rec.steps = taken == 0 ? rec.steps : taken;
  return rec;
}

RunRecord run(const Solver& solver, const Word& w, std::uint64_t step_cap) {
  auto machine = solver.make(w);
  return drive(*machine, step_cap);
}

ComplexityBound ComplexityBound::linear(double c) {
  ComplexityBound b;
  b.spec_ = "lin:" + std::to_string(c);
  b.f_ = [c](std::size_t n) {
    double v = std::ceil(c * static_cast<double>(n));
    return v < 1.0 ? std::uint64_t{1} : static_cast<std::uint64_t>(v);
  };
  return b;
}

ComplexityBound ComplexityBound::quadratic(double c) {
  ComplexityBound b;
  b.spec_ = "quad:" + std::to_string(c);
  b.f_ = [c](std::size_t n) {
    double v = std::ceil(c * static_cast<double>(n) * static_cast<double>(n));
    return v < 1.0 ? std::uint64_t{1} : static_cast<std::uint64_t>(v);
  };
  return b;
}

ComplexityBound ComplexityBound::subexp_root(double c) {
  ComplexityBound b;
  b.spec_ = "subexp:" + std::to_string(c);
  b.f_ = [c](std::size_t n) {
    double e = std::ceil(std::sqrt(static_cast<double>(n)));
    double v = std::ceil(c * std::exp2(std::min(e, 62.0)));
    return v < 1.0 ? std::uint64_t{1} : static_cast<std::uint64_t>(v);
  };
  return b;
}

ComplexityBound ComplexityBound::custom(std::vector<std::uint64_t> table) {
  if (table.empty()) throw std::invalid_argument("empty bound table");
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table[i] < table[i - 1])
      throw std::invalid_argument("bound table must be non-decreasing");
  }
  ComplexityBound b;
  b.spec_ = "custom";
  b.f_ = [t = std::move(table)](std::size_t n) {
    std::uint64_t v = n < t.size() ? t[n] : t.back();
    return std::max<std::uint64_t>(v, 1);
  };
  return b;
}

std::uint64_t ComplexityBound::eval(std::size_t n) const { return f_(n); }

ComplexityBound parse_bound_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  double c = 1.0;
  if (colon != std::string::npos) {
    try {
      c = std::stod(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad bound constant in: " + spec);
    }
    if (!(c > 0)) throw std::invalid_argument("bound constant must be positive");
  }
  if (head == "lin" || head == "n") return ComplexityBound::linear(c);
  if (head == "quad" || head == "n2") return ComplexityBound::quadratic(c);
  if (head == "subexp") return ComplexityBound::subexp_root(c);
  throw std::invalid_argument("unknown bound spec: " + spec);
}

Word apply_homomorphism(const Homomorphism& h, const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (l.gen() >= h.images.size())
      throw std::invalid_argument("letter outside homomorphism source");
    const Word& image = h.images[l.gen()];
    if (l.sign() > 0) {
      out.append(image);
    } else {
      out.append(image.inverse());
    }
  }
  return free_reduce(out);
}

namespace {

RunRecord make_record(StepStatus status, Answer answer, std::uint64_t steps) {
  RunRecord r;
  r.status = status;
  r.answer = answer;
  r.steps = std::max<std::uint64_t>(steps, 1);
  return r;
}

std::uint64_t word_cost(const Word& w) {
  return std::max<std::uint64_t>(w.size(), 1);
}

}  // namespace

Solver free_group_solver(const Alphabet& alphabet) {
  (void)alphabet;
  Solver s;
  s.name = "free";
  s.total = true;
  s.make = [](const Word& w) {
    bool trivial = free_reduce(w).empty();
    return std::make_unique<StepMachine>(make_record(
        StepStatus::Decided,
        trivial ? Answer::InLanguage : Answer::NotInLanguage, word_cost(w)));
  };
  return s;
}

Solver free_abelian_solver(const Alphabet& alphabet) {
  std::size_t g = alphabet.generators();
  Solver s;
  s.name = "abelian";
  s.total = true;
  s.make = [g](const Word& w) {
    std::vector<std::int64_t> exponent(g, 0);
    for (const Letter& l : w) {
      if (l.gen() >= g) throw std::invalid_argument("letter outside alphabet");
      exponent[l.gen()] += l.sign();
    }
    bool trivial = std::all_of(exponent.begin(), exponent.end(),
                               [](std::int64_t e) { return e == 0; });
    return std::make_unique<StepMachine>(make_record(
        StepStatus::Decided,
        trivial ? Answer::InLanguage : Answer::NotInLanguage, word_cost(w)));
  };
  return s;
}

Solver quotient_filter(const Homomorphism& h, const Solver& target_total) {
  if (!target_total.total)
    throw std::invalid_argument("quotient filter needs a total target solver");
  Solver s;
  s.name = "quotient(" + target_total.name + ")";
  s.total = false;
  s.make = [h, target_total](const Word& w) {
    Word image = apply_homomorphism(h, w);
    auto inner = target_total.make(image);
    const RunRecord& target = inner->final_record();
    std::uint64_t steps = word_cost(w) + target.steps;
    if (target.decided() && target.answer == Answer::NotInLanguage) {
      return std::make_unique<StepMachine>(
          make_record(StepStatus::Decided, Answer::NotInLanguage, steps));
    }
    return std::make_unique<StepMachine>(
        make_record(StepStatus::UndecidedFinal, Answer::NotInLanguage, steps));
  };
  return s;
}

namespace {

class ParallelMachine : public StepMachine {
 public:
  ParallelMachine(RunRecord combined, ParallelOutcome outcome)
      : StepMachine(combined), outcome_(outcome) {}
  const ParallelOutcome* parallel_outcome() const override { return &outcome_; }

 private:
  ParallelOutcome outcome_;
};

}  // namespace

Solver parallel_combine(const Solver& total, const Solver& partial) {
  if (!total.total)
    throw std::invalid_argument("parallel_combine needs a total first solver");
  Solver s;
  s.name = total.name + "||" + partial.name;
  s.total = true;
  s.make = [total, partial](const Word& w) -> std::unique_ptr<StepMachine> {
    auto pm = partial.make(w);
    auto tm = total.make(w);
    const RunRecord& p = pm->final_record();
    const RunRecord& t = tm->final_record();
    if (!t.decided())
      throw std::logic_error("total solver ended undecided: " + total.name);

    // Interleaving p t p t ...: the partial's i-th step is combined step
    // 2i-1, the total's is 2i. After the partial ends UndecidedFinal, every
    // step goes to the total.
    RunRecord combined;
    combined.status = StepStatus::Decided;
    if (p.decided()) {
      std::uint64_t at_partial = 2 * p.steps - 1;
      std::uint64_t at_total = 2 * t.steps;
      if (at_partial < at_total) {
        combined.answer = p.answer;
        combined.steps = at_partial;
      } else {
        combined.answer = t.answer;
        combined.steps = at_total;
      }
    } else {
      combined.answer = t.answer;
      combined.steps = (t.steps <= p.steps - 1) ? 2 * t.steps : t.steps + p.steps;
    }
    return std::make_unique<ParallelMachine>(
        combined, StepMachine::ParallelOutcome{t, p});
  };
  return s;
}

Solver with_forced_cost(const Solver& inner, const ComplexityBound& bound) {
  Solver s;
  s.name = inner.name + "@" + bound.spec();
  s.total = inner.total;
  s.make = [inner, bound](const Word& w) {
    auto m = inner.make(w);
    RunRecord rec = m->final_record();
    rec.steps = std::max(rec.steps, bound.eval(w.size()));
    return std::make_unique<StepMachine>(rec);
  };
  return s;
}

Solver scripted_solver(std::string name, bool total,
                       std::function<RunRecord(const Word&)> script) {
  Solver s;
  s.name = std::move(name);
  s.total = total;
  s.make = [script = std::move(script)](const Word& w) {
    RunRecord rec = script(w);
    rec.steps = std::max<std::uint64_t>(rec.steps, 1);
    return std::make_unique<StepMachine>(rec);
  };
  return s;
}

ProductPipeline product_pipeline(const Solver& g_solver, const Alphabet& g_alphabet) {
  for (const auto& n : g_alphabet.names()) {
    if (n == "a" || n == "b")
      throw std::invalid_argument("G generator name clashes with the free pair");
  }
  std::vector<std::string> names = g_alphabet.names();
  std::size_t g_count = names.size();
  names.push_back("a");
  names.push_back("b");

  ProductPipeline p;
  p.alphabet = Alphabet(names);
  p.free_alphabet = Alphabet({"a", "b"});

  // projection homomorphism onto the free factor
  p.to_free.source = p.alphabet;
  p.to_free.target = p.free_alphabet;
  for (std::size_t i = 0; i < g_count; ++i) p.to_free.images.push_back(Word());
  p.to_free.images.push_back(Word({Letter(0, 1)}));
  p.to_free.images.push_back(Word({Letter(1, 1)}));

  Solver free_solver = free_group_solver(p.free_alphabet);

  Solver total;
  total.name = g_solver.name + "xF2";
  total.total = true;
  total.make = [g_solver, free_solver, g_count](const Word& w) {
    Word g_part, f_part;
    for (const Letter& l : w) {
      if (l.gen() < g_count) {
        g_part.push_back(l);
      } else {
        f_part.push_back(Letter(static_cast<std::uint32_t>(l.gen() - g_count), l.sign()));
      }
    }
    auto gm = g_solver.make(g_part);
    auto fm = free_solver.make(f_part);
    const RunRecord& gr = gm->final_record();
    const RunRecord& fr = fm->final_record();
    if (!gr.decided() || !fr.decided())
      throw std::logic_error("product factors must be total");
    bool trivial = gr.answer == Answer::InLanguage && fr.answer == Answer::InLanguage;
    return std::make_unique<StepMachine>(make_record(
        StepStatus::Decided,
        trivial ? Answer::InLanguage : Answer::NotInLanguage,
        word_cost(w) + gr.steps + fr.steps));
  };

  p.total = total;
  p.filter = quotient_filter(p.to_free, free_solver);
  p.combined = parallel_combine(p.total, p.filter);
  return p;
}

}  // namespace gencase
