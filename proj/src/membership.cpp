#include "gencase/membership.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "gencase/rng.hpp"

namespace gencase {

CoreGraph::CoreGraph(Alphabet alphabet, std::vector<std::vector<std::size_t>> next)
    : alphabet_(std::move(alphabet)), next_(std::move(next)) {
  std::size_t k = alphabet_.letters();
  for (std::size_t v = 0; v < next_.size(); ++v) {
    if (next_[v].size() != k) throw std::invalid_argument("bad edge table width");
    for (std::uint32_t c = 0; c < k; ++c) {
      std::size_t t = next_[v][c];
      if (t == npos) continue;
      if (t >= next_.size() || next_[t][c ^ 1] != v)
        throw std::invalid_argument("edge table not involutive");
    }
  }
}

std::size_t CoreGraph::missing_count(std::size_t v) const {
  std::size_t m = 0;
  for (std::size_t t : next_[v])
    if (t == npos) ++m;
  return m;
}

std::vector<std::size_t> CoreGraph::canonical_signature() const {
  std::size_t k = alphabet_.letters();
  std::vector<std::size_t> order(vertex_count(), npos);
  std::vector<std::size_t> bfs;
  order[0] = 0;
  bfs.push_back(0);
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    std::size_t v = bfs[i];
    for (std::uint32_t c = 0; c < k; ++c) {
      std::size_t t = next_[v][c];
      if (t != npos && order[t] == npos) {
        order[t] = bfs.size();
        bfs.push_back(t);
      }
    }
  }
  std::vector<std::size_t> sig;
  sig.push_back(vertex_count());
  for (std::size_t v : bfs) {
    for (std::uint32_t c = 0; c < k; ++c) {
      std::size_t t = next_[v][c];
      sig.push_back(t == npos ? npos : order[t]);
    }
  }
  return sig;
}

namespace {

struct FoldBuilder {
  std::vector<std::size_t> parent;
  // outgoing labeled edges, both directions recorded
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> edges;

  std::size_t add_vertex() {
    parent.push_back(parent.size());
    edges.emplace_back();
    return parent.size() - 1;
  }

  std::size_t find(std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  void add_edge(std::size_t u, std::uint32_t code, std::size_t v) {
    edges[u].push_back({code, v});
    edges[v].push_back({code ^ 1u, u});
  }

  // merge the classes of a and b; returns the surviving representative
  std::size_t unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (edges[a].size() < edges[b].size()) std::swap(a, b);
    parent[b] = a;
    edges[a].insert(edges[a].end(), edges[b].begin(), edges[b].end());
    edges[b].clear();
    edges[b].shrink_to_fit();
    return a;
  }
};

}  // namespace

CoreGraph stallings_core(const Alphabet& alphabet,
                         const std::vector<Word>& generators,
                         std::uint64_t fold_order_seed) {
  std::size_t k = alphabet.letters();
  FoldBuilder fb;
  std::size_t base = fb.add_vertex();
  for (const Word& g : generators) {
    Word w = free_reduce(g);
    if (w.empty()) continue;
    std::size_t cur = base;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t nxt = (i + 1 == w.size()) ? base : fb.add_vertex();
      fb.add_edge(cur, w[i].code(), nxt);
      cur = nxt;
    }
  }

  Rng rng(fold_order_seed);
  bool merged = true;
  while (merged) {
    merged = false;
    std::vector<std::size_t> scan;
    scan.reserve(fb.parent.size());
    for (std::size_t v = 0; v < fb.parent.size(); ++v)
      if (fb.find(v) == v) scan.push_back(v);
    if (fold_order_seed != 0) {
      for (std::size_t i = scan.size(); i > 1; --i)
        std::swap(scan[i - 1], scan[rng.below(i)]);
    }
    for (std::size_t v : scan) {
      if (fb.find(v) != v) continue;
      std::vector<std::size_t> slot(k, CoreGraph::npos);
      for (auto& [code, raw_target] : fb.edges[v]) {
        std::size_t t = fb.find(raw_target);
        raw_target = t;
        if (slot[code] == CoreGraph::npos) {
          slot[code] = t;
        } else if (slot[code] != t) {
          fb.unite(slot[code], t);
          merged = true;
          break;  // edge list of v may have moved; rescan
        }
      }
      if (merged) break;
    }
  }

  // compact representatives into a dense table
  std::vector<std::size_t> index(fb.parent.size(), CoreGraph::npos);
  std::vector<std::size_t> reps;
  std::size_t base_rep = fb.find(base);
  index[base_rep] = 0;
  reps.push_back(base_rep);
  for (std::size_t v = 0; v < fb.parent.size(); ++v) {
    std::size_t r = fb.find(v);
    if (index[r] == CoreGraph::npos) {
      index[r] = reps.size();
      reps.push_back(r);
    }
  }
  std::vector<std::vector<std::size_t>> next(
      reps.size(), std::vector<std::size_t>(k, CoreGraph::npos));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const auto& [code, target] : fb.edges[reps[i]]) {
      next[i][code] = index[fb.find(target)];
    }
  }
  return CoreGraph(alphabet, std::move(next));
}

Answer membership_trace(const CoreGraph& core, const Word& w) {
  Word r = free_reduce(w);
  std::size_t cur = core.base();
  for (const Letter& l : r) {
    cur = core.next(cur, l.code());
    if (cur == CoreGraph::npos) return Answer::NotInLanguage;
  }
  return cur == core.base() ? Answer::InLanguage : Answer::NotInLanguage;
}

WalkResult schreier_walk(const CoreGraph& core, const Word& w) {
  std::size_t cur = core.base();
  std::vector<std::uint32_t> tree_path;  // labels read on the way out
  for (const Letter& l : w) {
    if (tree_path.empty()) {
      std::size_t t = core.next(cur, l.code());
      if (t != CoreGraph::npos) {
        cur = t;
      } else {
        tree_path.push_back(l.code());
      }
    } else if (l.code() == (tree_path.back() ^ 1u)) {
      tree_path.pop_back();
    } else {
      tree_path.push_back(l.code());
    }
  }
  WalkResult res;
  res.ends_at_base = tree_path.empty() && cur == core.base();
  res.answer = res.ends_at_base ? Answer::InLanguage : Answer::NotInLanguage;
  return res;
}

namespace {

RunRecord linear_record(Answer a, const Word& w) {
  RunRecord rec;
  rec.status = StepStatus::Decided;
  rec.answer = a;
  rec.steps = std::max<std::uint64_t>(w.size(), 1);
  return rec;
}

}  // namespace

Solver membership_solver(CoreGraph core) {
  auto shared = std::make_shared<CoreGraph>(std::move(core));
  Solver s;
  s.name = "stallings";
  s.total = true;
  s.make = [shared](const Word& w) {
    return std::make_unique<StepMachine>(linear_record(membership_trace(*shared, w), w));
  };
  return s;
}

Solver schreier_walk_solver(CoreGraph core) {
  auto shared = std::make_shared<CoreGraph>(std::move(core));
  Solver s;
  s.name = "schreier-walk";
  s.total = true;
  s.make = [shared](const Word& w) {
    return std::make_unique<StepMachine>(linear_record(schreier_walk(*shared, w).answer, w));
  };
  return s;
}

std::vector<Word> parse_subgroup(const Alphabet& alphabet, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Word> gens;
  while (std::getline(in, line)) {
    bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
      return std::isspace(c);
    });
    if (blank) continue;
    gens.push_back(parse_word(alphabet, line));
  }
  return gens;
}

WalkGraphSpec WalkGraphSpec::free_cayley(std::size_t g) {
  WalkGraphSpec s;
  s.kind = Kind::FreeCayley;
  s.rank = g;
  return s;
}

WalkGraphSpec WalkGraphSpec::line() {
  WalkGraphSpec s;
  s.kind = Kind::Line;
  return s;
}

WalkGraphSpec WalkGraphSpec::schreier(CoreGraph core) {
  WalkGraphSpec s;
  s.kind = Kind::Schreier;
  s.core = std::move(core);
  return s;
}

namespace {

void finish_table(SpectralTable* t, std::size_t n, double alpha) {
  if (n >= 1) {
    double num = t->p_even_value[n];
    double den = t->p_even_value[n - 1];
    t->tail_ratio = den > 0 ? num / den : 0.0;
    double corr = std::pow(static_cast<double>(n) / static_cast<double>(n - 1), alpha);
    t->corrected_ratio = t->tail_ratio * corr;
    t->rho_hat = t->corrected_ratio > 0 ? std::sqrt(t->corrected_ratio) : 0.0;
  }
}

// distance-from-root chain of a d-regular tree (d = 2 is the line):
// from 0 to 1 with probability 1; from m > 0 down with 1/d, up with (d-1)/d.
SpectralTable tree_dp(std::size_t degree, std::size_t n) {
  if (degree < 2) throw std::invalid_argument("degree must be >= 2");
  std::size_t steps = 2 * n;
  std::vector<BigInt> cur(steps + 2), nxt(steps + 2);
  cur[0] = BigInt(1);
  SpectralTable table;
  table.exact = true;
  table.p_even.push_back(Rational{BigInt(1), BigInt(1)});
  table.p_even_value.push_back(1.0);
  for (std::size_t t = 1; t <= steps; ++t) {
    for (auto& v : nxt) v = BigInt();
    for (std::size_t m = 0; m <= steps; ++m) {
      if (cur[m].is_zero()) continue;
      if (m == 0) {
        BigInt up = cur[0];
        up.mul_small(degree);
        nxt[1] += up;
      } else {
        nxt[m - 1] += cur[m];
        BigInt up = cur[m];
        up.mul_small(degree - 1);
        nxt[m + 1] += up;
      }
    }
    std::swap(cur, nxt);
    if (t % 2 == 0) {
      Rational p{cur[0], BigInt::pow(degree, t)};
      table.p_even_value.push_back(p.to_double());
      table.p_even.push_back(std::move(p));
    }
  }
  finish_table(&table, n, degree == 2 ? 0.5 : 1.5);
  return table;
}

// Lumped exact chain for the Schreier graph: core vertices plus one hanging
// tree level per (vertex, depth); all trees below one vertex behave alike.
SpectralTable schreier_dp(const CoreGraph& core, std::size_t n) {
  std::size_t k = core.alphabet().letters();
  std::size_t v_count = core.vertex_count();
  std::size_t depth_cap = 2 * n + 1;
  auto idx = [&](std::size_t v, std::size_t depth) {
    return depth == 0 ? v : v_count + v * depth_cap + (depth - 1);
  };
  std::size_t states = v_count + v_count * depth_cap;
  std::vector<BigInt> cur(states), nxt(states);
  cur[idx(core.base(), 0)] = BigInt(1);
  SpectralTable table;
  table.exact = true;
  table.p_even.push_back(Rational{BigInt(1), BigInt(1)});
  table.p_even_value.push_back(1.0);
  for (std::size_t t = 1; t <= 2 * n; ++t) {
    for (auto& cell : nxt) cell = BigInt();
    for (std::size_t v = 0; v < v_count; ++v) {
      const BigInt& mass = cur[idx(v, 0)];
      if (!mass.is_zero()) {
        std::size_t missing = 0;
        for (std::uint32_t c = 0; c < k; ++c) {
          std::size_t tgt = core.next(v, c);
          if (tgt == CoreGraph::npos) {
            ++missing;
          } else {
            nxt[idx(tgt, 0)] += mass;
          }
        }
        if (missing > 0) {
          BigInt up = mass;
          up.mul_small(missing);
          nxt[idx(v, 1)] += up;
        }
      }
      for (std::size_t depth = 1; depth < depth_cap; ++depth) {
        const BigInt& dm = cur[idx(v, depth)];
        if (dm.is_zero()) continue;
        nxt[idx(v, depth - 1)] += dm;
        if (depth + 1 < depth_cap) {
          BigInt up = dm;
          up.mul_small(k - 1);
          nxt[idx(v, depth + 1)] += up;
        }
      }
    }
    std::swap(cur, nxt);
    if (t % 2 == 0) {
      Rational p{cur[idx(core.base(), 0)], BigInt::pow(k, t)};
      table.p_even_value.push_back(p.to_double());
      table.p_even.push_back(std::move(p));
    }
  }
  finish_table(&table, n, 1.5);
  return table;
}

}  // namespace

SpectralTable spectral_dp(const WalkGraphSpec& spec, std::size_t n) {
  if (n < 1) throw std::invalid_argument("need at least one even step");
  switch (spec.kind) {
    case WalkGraphSpec::Kind::FreeCayley:
      return tree_dp(2 * spec.rank, n);
    case WalkGraphSpec::Kind::Line:
      return tree_dp(2, n);
    case WalkGraphSpec::Kind::Schreier:
      return schreier_dp(*spec.core, n);
  }
  throw std::logic_error("unreachable");
}

SpectralTable spectral_mc(const WalkGraphSpec& spec, std::size_t n,
                          std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  if (n < 1) throw std::invalid_argument("need at least one even step");
  std::vector<std::uint64_t> returns(n + 1, 0);
  returns[0] = trials;
  Rng rng(seed);
  const bool on_graph = spec.kind == WalkGraphSpec::Kind::Schreier;
  std::size_t degree = spec.kind == WalkGraphSpec::Kind::Line ? 2 : 2 * spec.rank;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    if (on_graph) {
      const CoreGraph& core = *spec.core;
      std::size_t k = core.alphabet().letters();
      std::size_t cur = core.base();
      std::vector<std::uint32_t> tree;
      for (std::size_t t = 1; t <= 2 * n; ++t) {
        std::uint32_t c = static_cast<std::uint32_t>(rng.below(k));
        if (tree.empty()) {
          std::size_t tgt = core.next(cur, c);
          if (tgt != CoreGraph::npos) {
            cur = tgt;
          } else {
            tree.push_back(c);
          }
        } else if (c == (tree.back() ^ 1u)) {
          tree.pop_back();
        } else {
          tree.push_back(c);
        }
        if (t % 2 == 0 && tree.empty() && cur == core.base()) ++returns[t / 2];
      }
    } else {
      std::size_t m = 0;
      for (std::size_t t = 1; t <= 2 * n; ++t) {
        if (m == 0) {
          m = 1;
        } else if (rng.below(degree) == 0) {
          --m;
        } else {
          ++m;
        }
        if (t % 2 == 0 && m == 0) ++returns[t / 2];
      }
    }
  }
  SpectralTable table;
  table.exact = false;
  table.trials = trials;
  for (std::size_t t = 0; t <= n; ++t) {
    table.p_even_value.push_back(static_cast<double>(returns[t]) /
                                 static_cast<double>(trials));
  }
  double alpha = spec.kind == WalkGraphSpec::Kind::Line ? 0.5 : 1.5;
  finish_table(&table, n, alpha);
  return table;
}

}  // namespace gencase
