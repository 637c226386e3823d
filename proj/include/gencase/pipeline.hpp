#pragma once

#include <functional>
#include <optional>
#include <string>

#include "gencase/braid.hpp"
#include "gencase/membership.hpp"
#include "gencase/presentation.hpp"
#include "gencase/solver.hpp"

namespace gencase {

/// A named decision problem wired up with its total solver, generic filter
/// and their parallel combination, plus default normalizing bounds.
struct Pipeline {
  std::string name;
  Alphabet alphabet;
  Solver total;
  std::optional<Solver> filter;
  Solver combined;
  ComplexityBound combined_bound = ComplexityBound::linear();
  ComplexityBound total_bound = ComplexityBound::linear();
  std::function<Word(const std::string&)> parse_input;
};

/// WP(F_g); the filter slot holds the same always-deciding solver.
Pipeline free_pipeline(std::size_t g = 2);
/// Genus-2 surface group: Dehn total solver, F_2 quotient filter.
Pipeline surface_pipeline();
/// WP(B_n): Garside total (quadratic bound), permutation/SL2 filter.
Pipeline braid_pipeline_named(int strands, Sl2Mode mode = Sl2Mode::ModP);
/// G x F(a,b) with G = Z or the surface group.
Pipeline product_z_pipeline();
Pipeline product_surface_pipeline();
/// MP(F_2, H) for the subgroup generated by `generators`.
Pipeline membership_pipeline(const Alphabet& alphabet,
                             const std::vector<Word>& generators,
                             std::string name = "membership");

/// Specs: "free", "free:g", "surface", "braid:n", "braid:n:exact",
/// "product:z", "product:surface", "membership:<file>".
Pipeline make_pipeline(const std::string& spec);

}  // namespace gencase
