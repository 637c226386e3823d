#include "gencase/word.hpp"

#include <algorithm>
#include <unordered_set>

namespace gencase {

Alphabet::Alphabet(std::vector<std::string> generator_names)
    : names_(std::move(generator_names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet needs at least one generator");
  std::unordered_set<std::string> seen;
  single_char_ = true;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty generator name");
    if (n.find('\'') != std::string::npos || n.find(' ') != std::string::npos)
      throw std::invalid_argument("generator name contains reserved character: " + n);
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate generator name: " + n);
    if (n.size() != 1) single_char_ = false;
  }
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.append(b);
  return r;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) return false;
  }
  return true;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> out;
  out.reserve(hi - lo);
  for (std::size_t i = lo; i < hi; ++i) out.push_back(r[i]);
  return Word(std::move(out));
}

std::uint64_t word_hash(const Word& w) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const Letter& l : w) {
    h ^= l.code() + 1;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.name(w[i].gen());
    if (w[i].sign() < 0) out += '\'';
  }
  return out;
}

namespace {

bool parse_token(const Alphabet& alphabet, const std::string& token, Word* out) {
  bool inv = token.size() > 1 && token.back() == '\'';
  std::string base = inv ? token.substr(0, token.size() - 1) : token;
  for (std::size_t g = 0; g < alphabet.generators(); ++g) {
    if (alphabet.name(g) == base) {
      out->push_back(Letter(static_cast<std::uint32_t>(g), inv ? -1 : 1));
      return true;
    }
  }
  return false;
}

bool parse_compact(const Alphabet& alphabet, const std::string& token, Word* out) {
  Word local;
  for (char c : token) {
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    bool inv = std::isupper(static_cast<unsigned char>(c)) != 0;
    bool found = false;
    for (std::size_t g = 0; g < alphabet.generators(); ++g) {
      if (alphabet.name(g)[0] == lower) {
        local.push_back(Letter(static_cast<std::uint32_t>(g), inv ? -1 : 1));
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  out->append(local);
  return true;
}

}  // namespace

Word parse_word(const Alphabet& alphabet, const std::string& text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string token = text.substr(i, j - i);
    if (!parse_token(alphabet, token, &out)) {
      if (!alphabet.single_char_names() || !parse_compact(alphabet, token, &out))
        throw std::invalid_argument("unknown word token: " + token);
    }
    i = j;
  }
  return out;
}

BigInt slice_count(const Alphabet& alphabet, Universe universe, std::size_t n) {
  std::uint64_t k = alphabet.letters();
  if (n == 0) return BigInt(std::int64_t{1});
  if (universe == Universe::AllWords) return BigInt::pow(k, n);
  BigInt r{k};
  for (std::size_t i = 1; i < n; ++i) r.mul_small(k - 1);
  return r;
}

BigInt ball_count(const Alphabet& alphabet, Universe universe, std::size_t n) {
  BigInt total;
  for (std::size_t m = 0; m <= n; ++m) total += slice_count(alphabet, universe, m);
  return total;
}

void enumerate_words(const Alphabet& alphabet, Universe universe,
                     std::size_t n, std::uint64_t budget,
                     const std::function<void(const Word&)>& fn) {
  if (slice_count(alphabet, universe, n) > BigInt(budget)) {
    throw EnumerationBudgetError(
        "slice of length " + std::to_string(n) + " exceeds enumeration budget " +
        std::to_string(budget));
  }
  if (n == 0) {
    fn(Word());
    return;
  }
  const std::uint32_t k = static_cast<std::uint32_t>(alphabet.letters());
  const bool reduced = universe == Universe::ReducedWords;
  std::vector<std::uint32_t> codes(n, 0);

  auto min_code = [&](std::size_t pos) -> std::uint32_t {
    if (!reduced || pos == 0) return 0;
    return (codes[pos - 1] ^ 1u) == 0u ? 1u : 0u;
  };
  auto next_code = [&](std::size_t pos, std::uint32_t c) -> std::uint32_t {
    // smallest admissible code > c, or k when exhausted
    std::uint32_t cand = c + 1;
    if (reduced && pos > 0 && cand == (codes[pos - 1] ^ 1u)) ++cand;
    return cand;
  };

  for (std::size_t pos = 0; pos < n; ++pos) codes[pos] = min_code(pos);
  for (;;) {
    std::vector<Letter> letters;
    letters.reserve(n);
    for (std::uint32_t c : codes) letters.push_back(Letter::from_code(c));
    fn(Word(std::move(letters)));

    std::size_t pos = n;
    while (pos-- > 0) {
      std::uint32_t cand = next_code(pos, codes[pos]);
      if (cand < k) {
        codes[pos] = cand;
        for (std::size_t j = pos + 1; j < n; ++j) codes[j] = min_code(j);
        break;
      }
      if (pos == 0) return;
    }
  }
}

Word sample_word(const Alphabet& alphabet, Universe universe, std::size_t n,
                 Rng& rng) {
  const std::uint32_t k = static_cast<std::uint32_t>(alphabet.letters());
  std::vector<Letter> letters;
  letters.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t c;
    if (universe == Universe::ReducedWords && i > 0) {
      std::uint32_t banned = letters.back().code() ^ 1u;
      c = static_cast<std::uint32_t>(rng.below(k - 1));
      if (c >= banned) ++c;
    } else {
      c = static_cast<std::uint32_t>(rng.below(k));
    }
    letters.push_back(Letter::from_code(c));
  }
  return Word(std::move(letters));
}

}  // namespace gencase
