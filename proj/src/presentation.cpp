#include "gencase/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace gencase {

Presentation Presentation::make(Alphabet alphabet, std::vector<Word> relators) {
  Presentation p{std::move(alphabet), {}};
  for (const Word& r : relators) {
    Word reduced = cyclic_reduce(r);
    if (reduced.empty())
      throw std::invalid_argument("relator reduces to the empty word");
    for (const Letter& l : reduced) {
      if (l.gen() >= p.alphabet.generators())
        throw std::invalid_argument("relator letter outside alphabet");
    }
    p.relators.push_back(std::move(reduced));
  }
  return p;
}

namespace {

Word rotate(const Word& w, std::size_t offset) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out.push_back(w[(i + offset) % w.size()]);
  return Word(std::move(out));
}

}  // namespace

SymmetrizedSet symmetrize(const Presentation& p) {
  SymmetrizedSet set;
  for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
    const Word& r = p.relators[ri];
    Word rinv = r.inverse();
    for (std::size_t off = 0; off < r.size(); ++off) {
      set.entries.push_back({rotate(r, off), ri, off, false});
      set.entries.push_back({rotate(rinv, off), ri, off, true});
    }
    if (set.min_relator_length == 0 || r.size() < set.min_relator_length)
      set.min_relator_length = r.size();
    set.max_relator_length = std::max(set.max_relator_length, r.size());
  }
  return set;
}

MetricConditionReport verify_metric_condition(const Presentation& p, double lambda) {
  if (!(lambda > 0))
    throw std::invalid_argument("lambda must be positive");
  SymmetrizedSet set = symmetrize(p);
  MetricConditionReport rep;
  rep.lambda = lambda;
  rep.min_relator_length = set.min_relator_length;
  if (set.entries.empty()) {
    rep.passes = true;
    return rep;
  }
  std::size_t max_piece = 0;
  for (std::size_t i = 0; i < set.entries.size(); ++i) {
    for (std::size_t j = i + 1; j < set.entries.size(); ++j) {
      const Word& u = set.entries[i].word;
      const Word& v = set.entries[j].word;
      std::size_t cap = std::min(u.size(), v.size()) - 1;  // proper prefixes
      std::size_t m = 0;
      while (m < cap && u[m] == v[m]) ++m;
      max_piece = std::max(max_piece, m);
    }
  }
  rep.max_piece_length = max_piece;
  rep.passes = static_cast<double>(max_piece) <
               lambda * static_cast<double>(set.min_relator_length);
  return rep;
}

namespace {

// Dehn state shared by every machine built from one presentation.
struct DehnTable {
  SymmetrizedSet set;
  // entry indices grouped by first letter code
  std::vector<std::vector<std::size_t>> by_first;
  std::size_t max_len = 0;
};

struct DehnResult {
  bool trivial;
  std::uint64_t cost;
};

DehnResult dehn_run(const DehnTable& table, const Word& input) {
  std::uint64_t cost = std::max<std::uint64_t>(input.size(), 1);
  std::vector<Letter> w;
  {
    Word reduced = free_reduce(input);
    w.assign(reduced.begin(), reduced.end());
  }
  std::size_t scan_from = 0;
  const std::size_t back = table.max_len > 0 ? table.max_len - 1 : 0;

  while (!w.empty()) {
    // leftmost position (>= scan_from) carrying an over-half match
    std::size_t found_pos = w.size();
    std::size_t found_entry = 0;
    std::size_t found_len = 0;
    for (std::size_t pos = scan_from; pos < w.size() && found_pos == w.size(); ++pos) {
      ++cost;
      const auto& bucket = table.by_first[w[pos].code()];
      for (std::size_t ei : bucket) {
        const Word& r = table.set.entries[ei].word;
        std::size_t limit = std::min(r.size(), w.size() - pos);
        std::size_t m = 0;
        while (m < limit && w[pos + m] == r[m]) ++m;
        cost += m + 1;
        if (2 * m > r.size() && m > found_len) {
          found_pos = pos;
          found_entry = ei;
          found_len = m;
        }
      }
    }
    if (found_pos == w.size()) return {false, cost};

    // replace the matched prefix by the inverse of the entry's complement
    const Word& r = table.set.entries[found_entry].word;
    std::size_t old_size = w.size();
    std::vector<Letter> rebuilt(w.begin(), w.begin() + found_pos);
    std::size_t min_prefix = rebuilt.size();
    auto push_cancel = [&](Letter l) {
      if (!rebuilt.empty() && rebuilt.back() == l.inverse()) {
        rebuilt.pop_back();
        min_prefix = std::min(min_prefix, rebuilt.size());
      } else {
        rebuilt.push_back(l);
      }
      ++cost;
    };
    for (std::size_t i = r.size(); i-- > found_len;) push_cancel(r[i].inverse());
    for (std::size_t i = found_pos + found_len; i < old_size; ++i) push_cancel(w[i]);
    w = std::move(rebuilt);
    if (w.size() >= old_size)
      throw std::logic_error("dehn replacement failed to shorten the word");
    scan_from = min_prefix > back ? min_prefix - back : 0;
  }
  return {true, cost};
}

}  // namespace

Solver dehn_solver(const Presentation& p, double lambda) {
  MetricConditionReport rep = verify_metric_condition(p, lambda);
  if (!rep.passes) {
    throw std::invalid_argument(
        "presentation fails C'(" + std::to_string(lambda) + "): max piece " +
        std::to_string(rep.max_piece_length) + ", min relator " +
        std::to_string(rep.min_relator_length));
  }
  auto table = std::make_shared<DehnTable>();
  table->set = symmetrize(p);
  table->by_first.resize(p.alphabet.letters());
  for (std::size_t i = 0; i < table->set.entries.size(); ++i)
    table->by_first[table->set.entries[i].word[0].code()].push_back(i);
  table->max_len = table->set.max_relator_length;

  Solver s;
  s.name = "dehn";
  s.total = true;
  s.make = [table](const Word& w) {
    DehnResult res = dehn_run(*table, w);
    RunRecord rec;
    rec.status = StepStatus::Decided;
    rec.answer = res.trivial ? Answer::InLanguage : Answer::NotInLanguage;
    rec.steps = std::max<std::uint64_t>(res.cost, 1);
    return std::make_unique<StepMachine>(rec);
  };
  return s;
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("empty presentation text");
  std::istringstream head(line);
  std::vector<std::string> names;
  std::string tok;
  while (head >> tok) names.push_back(tok);
  Alphabet alphabet(names);
  std::vector<Word> relators;
  while (std::getline(in, line)) {
    bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
      return std::isspace(c);
    });
    if (blank) continue;
    relators.push_back(parse_word(alphabet, line));
  }
  return Presentation::make(alphabet, relators);
}

std::string format_presentation(const Presentation& p) {
  std::string out;
  for (std::size_t g = 0; g < p.alphabet.generators(); ++g) {
    if (g) out += ' ';
    out += p.alphabet.name(g);
  }
  out += '\n';
  for (const Word& r : p.relators) {
    out += format_word(p.alphabet, r);
    out += '\n';
  }
  return out;
}

Presentation surface_presentation() {
  Alphabet alphabet({"a", "b", "c", "d"});
  Word relator = parse_word(alphabet, "a b a' b' c d c' d'");
  return Presentation::make(alphabet, {relator});
}

Homomorphism surface_to_free_homomorphism() {
  Homomorphism h;
  h.source = surface_presentation().alphabet;
  h.target = Alphabet({"a", "b"});
  h.images = {
      Word({Letter(0, 1)}),  // a -> a
      Word(),                // b -> 1
      Word({Letter(1, 1)}),  // c -> b
      Word(),                // d -> 1
  };
  return h;
}

}  // namespace gencase
