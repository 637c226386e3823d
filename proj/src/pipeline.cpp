#include "gencase/pipeline.hpp"

#include <fstream>
#include <sstream>

namespace gencase {

namespace {

std::function<Word(const std::string&)> word_parser(const Alphabet& alphabet) {
  return [alphabet](const std::string& text) { return parse_word(alphabet, text); };
}

}  // namespace

Pipeline free_pipeline(std::size_t g) {
  if (g < 1) throw std::invalid_argument("free pipeline needs rank >= 1");
  std::vector<std::string> names;
  const char* defaults[] = {"a", "b", "c", "d", "e", "f"};
  for (std::size_t i = 0; i < g; ++i) {
    names.push_back(i < 6 ? defaults[i] : "x" + std::to_string(i + 1));
  }
  Alphabet alphabet(names);
  Pipeline p;
  p.name = "free:" + std::to_string(g);
  p.alphabet = alphabet;
  p.total = free_group_solver(alphabet);
  Solver as_filter = p.total;
  as_filter.name = "free-as-filter";
  as_filter.total = false;
  p.filter = as_filter;
  p.combined = parallel_combine(p.total, *p.filter);
  p.combined_bound = ComplexityBound::linear();
  p.total_bound = ComplexityBound::linear();
  p.parse_input = word_parser(alphabet);
  return p;
}

Pipeline surface_pipeline() {
  Presentation pres = surface_presentation();
  Pipeline p;
  p.name = "surface";
  p.alphabet = pres.alphabet;
  p.total = dehn_solver(pres);
  Homomorphism h = surface_to_free_homomorphism();
  p.filter = quotient_filter(h, free_group_solver(h.target));
  p.combined = parallel_combine(p.total, *p.filter);
  p.combined_bound = ComplexityBound::linear();
  p.total_bound = ComplexityBound::linear();
  p.parse_input = word_parser(p.alphabet);
  return p;
}

Pipeline braid_pipeline_named(int strands, Sl2Mode mode) {
  BraidPipeline bp = braid_pipeline(strands, mode);
  Pipeline p;
  p.name = "braid:" + std::to_string(strands) +
           (mode == Sl2Mode::Exact ? ":exact" : "");
  p.alphabet = braid_alphabet(strands);
  p.total = bp.total;
  p.filter = bp.filter;
  p.combined = bp.combined;
  p.combined_bound = ComplexityBound::linear();
  p.total_bound = ComplexityBound::quadratic();
  p.parse_input = [strands](const std::string& text) {
    return parse_braid_integers(strands, text);
  };
  return p;
}

namespace {

Pipeline product_pipeline_of(const Solver& g_solver, const Alphabet& g_alphabet,
                             std::string name) {
  ProductPipeline pp = product_pipeline(g_solver, g_alphabet);
  Pipeline p;
  p.name = std::move(name);
  p.alphabet = pp.alphabet;
  p.total = pp.total;
  p.filter = pp.filter;
  p.combined = pp.combined;
  p.combined_bound = ComplexityBound::linear();
  p.total_bound = ComplexityBound::linear();
  p.parse_input = word_parser(pp.alphabet);
  return p;
}

}  // namespace

Pipeline product_z_pipeline() {
  Alphabet z({"t"});
  return product_pipeline_of(free_abelian_solver(z), z, "product:z");
}

Pipeline product_surface_pipeline() {
  Presentation pres = surface_presentation();
  // the free pair needs fresh names next to a,b,c,d
  std::vector<Word> relators = pres.relators;
  Alphabet renamed({"p", "q", "r", "s"});
  std::vector<Word> moved;
  for (const Word& rel : relators) moved.push_back(rel);
  Presentation pres2 = Presentation::make(renamed, moved);
  return product_pipeline_of(dehn_solver(pres2), renamed, "product:surface");
}

Pipeline membership_pipeline(const Alphabet& alphabet,
                             const std::vector<Word>& generators,
                             std::string name) {
  CoreGraph core = stallings_core(alphabet, generators);
  Pipeline p;
  p.name = std::move(name);
  p.alphabet = alphabet;
  p.total = membership_solver(core);
  Solver walk = schreier_walk_solver(core);
  walk.total = false;  // fills the filter role; exact for free groups
  p.filter = walk;
  p.combined = parallel_combine(p.total, *p.filter);
  p.combined_bound = ComplexityBound::linear();
  p.total_bound = ComplexityBound::linear();
  p.parse_input = word_parser(alphabet);
  return p;
}

Pipeline make_pipeline(const std::string& spec) {
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      std::size_t colon = s.find(':', start);
      parts.push_back(s.substr(start, colon - start));
      if (colon == std::string::npos) break;
      start = colon + 1;
    }
    return parts;
  };
  std::vector<std::string> parts = split(spec);
  const std::string& head = parts[0];
  try {
    if (head == "free") {
      return free_pipeline(parts.size() > 1 ? std::stoul(parts[1]) : 2);
    }
    if (head == "surface" && parts.size() == 1) return surface_pipeline();
    if (head == "braid" && parts.size() >= 2) {
      int strands = std::stoi(parts[1]);
      Sl2Mode mode = Sl2Mode::ModP;
      if (parts.size() == 3 && parts[2] == "exact") {
        mode = Sl2Mode::Exact;
      } else if (parts.size() == 3) {
        throw std::invalid_argument("unknown braid mode: " + parts[2]);
      }
      return braid_pipeline_named(strands, mode);
    }
    if (head == "product" && parts.size() == 2) {
      if (parts[1] == "z") return product_z_pipeline();
      if (parts[1] == "surface") return product_surface_pipeline();
    }
    if (head == "membership" && parts.size() == 2) {
      std::ifstream in(parts[1]);
      if (!in) throw std::invalid_argument("cannot read subgroup file: " + parts[1]);
      std::stringstream buf;
      buf << in.rdbuf();
      Alphabet f2({"a", "b"});
      return membership_pipeline(f2, parse_subgroup(f2, buf.str()),
                                 "membership:" + parts[1]);
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad pipeline spec: " + spec);
  }
  throw std::invalid_argument("unknown pipeline spec: " + spec);
}

}  // namespace gencase
