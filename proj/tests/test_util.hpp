#pragma once

#include <vector>

#include "gencase/braid.hpp"
#include "gencase/presentation.hpp"
#include "gencase/rng.hpp"
#include "gencase/word.hpp"

namespace gencase::testing {

// Independent reduction oracle: rescan for an adjacent inverse pair and
// erase it, until none remain. Quadratic on purpose; shares nothing with
// the stack implementation it checks.
inline Word scan_cancel_oracle(const Word& w) {
  std::vector<Letter> v(w.begin(), w.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == v[i + 1].inverse()) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i),
                v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return Word(std::move(v));
}

inline Word random_word(const Alphabet& alphabet, std::size_t n, Rng& rng,
                        Universe universe = Universe::AllWords) {
  return sample_word(alphabet, universe, n, rng);
}

// Random braid word over B_strands with uniform letters.
inline Word random_braid(int strands, std::size_t n, Rng& rng) {
  Word w;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t gen = static_cast<std::uint32_t>(rng.below(strands - 1));
    int sign = rng.below(2) == 0 ? 1 : -1;
    w.push_back(Letter(gen, sign));
  }
  return w;
}

// Band generator a_{ij} = (s_{j-1}..s_{i+1}) s_i^2 (s_{i+1}^-1..s_{j-1}^-1),
// 0 <= i < j < strands; these generate the pure braid group.
inline Word band_generator(int strands, std::uint32_t i, std::uint32_t j, int sign) {
  (void)strands;
  Word conj;
  for (std::uint32_t t = j - 1; t > i; --t) conj.push_back(Letter(t, 1));
  Word out = conj;
  out.push_back(Letter(i, sign));
  out.push_back(Letter(i, sign));
  out.append(conj.inverse());
  return out;
}

inline Word random_pure_braid(int strands, std::size_t bands, Rng& rng) {
  Word w;
  for (std::size_t t = 0; t < bands; ++t) {
    std::uint32_t i = static_cast<std::uint32_t>(rng.below(strands - 1));
    std::uint32_t j =
        i + 1 + static_cast<std::uint32_t>(rng.below(strands - 1 - i));
    w.append(band_generator(strands, i, j, rng.below(2) == 0 ? 1 : -1));
  }
  return w;
}

// Product of at most `factors` random conjugates of relators; trivial in
// the presented group by construction.
inline Word random_relator_product(const Presentation& p, std::size_t factors,
                                   std::size_t conj_len, Rng& rng) {
  Word out;
  std::size_t count = 1 + rng.below(factors);
  for (std::size_t i = 0; i < count; ++i) {
    const Word& r = p.relators[rng.below(p.relators.size())];
    Word g = sample_word(p.alphabet, Universe::AllWords, rng.below(conj_len + 1), rng);
    Word piece = g;
    piece.append(rng.below(2) == 0 ? r : r.inverse());
    piece.append(g.inverse());
    out.append(piece);
  }
  return out;
}

}  // namespace gencase::testing
