#include "gencase/braid.hpp"

#include <algorithm>
#include <sstream>

namespace gencase {

Alphabet braid_alphabet(int strands) {
  if (strands < 2) throw std::invalid_argument("need at least 2 strands");
  std::vector<std::string> names;
  for (int i = 1; i < strands; ++i) names.push_back("s" + std::to_string(i));
  return Alphabet(names);
}

Word parse_braid_integers(int strands, const std::string& text) {
  std::istringstream in(text);
  Word out;
  long long v;
  while (in >> v) {
    if (v == 0) throw std::invalid_argument("braid letters are nonzero integers");
    long long idx = v > 0 ? v : -v;
    if (idx >= strands)
      throw std::invalid_argument("crossing index " + std::to_string(idx) +
                                  " out of range for " + std::to_string(strands) +
                                  " strands");
    out.push_back(Letter(static_cast<std::uint32_t>(idx - 1), v > 0 ? 1 : -1));
  }
  if (!in.eof()) throw std::invalid_argument("bad braid word text: " + text);
  return out;
}

std::string format_braid_integers(const Word& braid) {
  std::string out;
  for (std::size_t i = 0; i < braid.size(); ++i) {
    if (i) out += ' ';
    long long v = static_cast<long long>(braid[i].gen()) + 1;
    out += std::to_string(braid[i].sign() > 0 ? v : -v);
  }
  return out;
}

void check_braid_word(int strands, const Word& braid) {
  for (const Letter& l : braid) {
    if (static_cast<int>(l.gen()) >= strands - 1)
      throw std::invalid_argument("braid letter outside B_" + std::to_string(strands));
  }
}

Perm perm_identity(int strands) {
  Perm p(strands);
  for (int i = 0; i < strands; ++i) p[i] = static_cast<std::uint8_t>(i);
  return p;
}

Perm perm_delta(int strands) {
  Perm p(strands);
  for (int i = 0; i < strands; ++i) p[i] = static_cast<std::uint8_t>(strands - 1 - i);
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

Perm permutation_of(int strands, const Word& braid) {
  check_braid_word(strands, braid);
  Perm p = perm_identity(strands);
  for (const Letter& l : braid) {
    // crossing of positions i, i+1; sign does not matter in S_n
    std::uint32_t i = l.gen();
    std::swap(p[i], p[i + 1]);
  }
  // p currently maps end position -> start strand; invert to start -> end
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<std::uint8_t>(i);
  return q;
}

bool is_pure(int strands, const Word& braid) {
  return perm_is_identity(permutation_of(strands, braid));
}

std::vector<Word> artin_action(int strands, const Word& braid) {
  check_braid_word(strands, braid);
  std::vector<std::vector<Letter>> images(strands);
  for (int j = 0; j < strands; ++j)
    images[j] = {Letter(static_cast<std::uint32_t>(j), 1)};

  for (const Letter& letter : braid) {
    std::uint32_t t = letter.gen();
    // images of x_t and x_{t+1} under this one crossing
    std::vector<Letter> img_t, img_t1;
    if (letter.sign() > 0) {
      img_t = {Letter(t, 1), Letter(t + 1, 1), Letter(t, -1)};
      img_t1 = {Letter(t, 1)};
    } else {
      img_t = {Letter(t + 1, 1)};
      img_t1 = {Letter(t + 1, -1), Letter(t, 1), Letter(t + 1, 1)};
    }
    for (auto& word : images) {
      std::vector<Letter> next;
      next.reserve(word.size() * 2);
      auto push = [&next](Letter l) {
        if (!next.empty() && next.back() == l.inverse()) {
          next.pop_back();
        } else {
          next.push_back(l);
        }
      };
      for (const Letter& l : word) {
        const std::vector<Letter>* sub = nullptr;
        if (l.gen() == t) {
          sub = &img_t;
        } else if (l.gen() == t + 1) {
          sub = &img_t1;
        }
        if (sub == nullptr) {
          push(l);
        } else if (l.sign() > 0) {
          for (const Letter& s : *sub) push(s);
        } else {
          for (auto it = sub->rbegin(); it != sub->rend(); ++it) push(it->inverse());
        }
      }
      word = std::move(next);
    }
  }
  std::vector<Word> out;
  out.reserve(strands);
  for (auto& w : images) out.push_back(Word(std::move(w)));
  return out;
}

bool artin_is_identity(const std::vector<Word>& action) {
  for (std::size_t j = 0; j < action.size(); ++j) {
    if (action[j].size() != 1) return false;
    if (action[j][0].gen() != j || action[j][0].sign() != 1) return false;
  }
  return true;
}

namespace {

// Descents of the table: set bit i means sigma_{i+1} left-divides.
std::uint64_t starting_set(const Perm& a) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] > a[i + 1]) s |= (std::uint64_t{1} << i);
  return s;
}

std::uint64_t finishing_set(const Perm& a) {
  Perm inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inv[a[i]] = static_cast<std::uint8_t>(i);
  return starting_set(inv);
}

bool perm_is_delta(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != a.size() - 1 - i) return false;
  return true;
}

// A := A * sigma_i  (the crossing happens after A): swap values i, i+1.
void append_sigma(Perm& a, std::uint32_t i) {
  for (auto& v : a) {
    if (v == i) {
      v = static_cast<std::uint8_t>(i + 1);
    } else if (v == i + 1) {
      v = static_cast<std::uint8_t>(i);
    }
  }
}

// B := sigma_i^{-1} * B (strip a leading crossing): swap entries i, i+1.
void strip_leading_sigma(Perm& b, std::uint32_t i) { std::swap(b[i], b[i + 1]); }

// tau(A) = Delta^-1 A Delta: conjugation by the flip.
Perm tau(const Perm& a) {
  std::size_t n = a.size();
  Perm r(n);
  for (std::size_t i = 0; i < n; ++i)
    r[i] = static_cast<std::uint8_t>(n - 1 - a[n - 1 - i]);
  return r;
}

struct GarsideState {
  int strands;
  long long inf = 0;
  std::vector<Perm> factors;
  std::uint64_t cost = 0;

  void append_positive(std::uint32_t i) {
    Perm f = perm_identity(strands);
    std::swap(f[i], f[i + 1]);
    factors.push_back(std::move(f));
    cost += 1;
  }

  void append_negative(std::uint32_t i) {
    // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); pushing Delta^-1 through the
    // existing factors applies tau to each of them.
    inf -= 1;
    for (auto& f : factors) {
      f = tau(f);
      cost += 1;
    }
    Perm c = perm_delta(strands);
    append_sigma(c, i);  // Delta * sigma_i^-1 as a permutation braid
    factors.push_back(std::move(c));
    cost += 1;
  }

  void normalize() {
    bool changed = true;
    while (changed) {
      changed = false;
      // drop trivial factors, absorb full twists into the infimum
      for (std::size_t idx = 0; idx < factors.size();) {
        if (perm_is_identity(factors[idx])) {
          factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(idx));
          changed = true;
        } else if (perm_is_delta(factors[idx])) {
          for (std::size_t j = 0; j < idx; ++j) {
            factors[j] = tau(factors[j]);
            cost += 1;
          }
          inf += 1;
          factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(idx));
          changed = true;
        } else {
          ++idx;
        }
      }
      // local left-weighting: move every divisor that can cross a factor
      // boundary to the left, until all adjacent pairs are left-weighted
      for (std::size_t j = factors.size(); j-- > 1;) {
        cost += 1;
        for (;;) {
          std::uint64_t movable =
              starting_set(factors[j]) & ~finishing_set(factors[j - 1]);
          if (movable == 0) break;
          std::uint32_t i = static_cast<std::uint32_t>(__builtin_ctzll(movable));
          append_sigma(factors[j - 1], i);
          strip_leading_sigma(factors[j], i);
          cost += 1;
          changed = true;
        }
      }
    }
  }
};

}  // namespace

GarsideResult garside_normal_form(int strands, const Word& braid) {
  check_braid_word(strands, braid);
  if (strands > 64) throw std::invalid_argument("strand count above 64 unsupported");
  GarsideState st;
  st.strands = strands;
  for (const Letter& l : braid) {
    if (l.sign() > 0) {
      st.append_positive(l.gen());
    } else {
      st.append_negative(l.gen());
    }
  }
  st.normalize();
  GarsideResult res;
  res.form.strands = strands;
  res.form.inf = st.inf;
  res.form.factors = std::move(st.factors);
  res.cost = std::max<std::uint64_t>(st.cost, 1);
  return res;
}

bool is_trivial_braid(int strands, const Word& braid) {
  return garside_normal_form(strands, braid).form.trivial();
}

Solver garside_solver(int strands) {
  Solver s;
  s.name = "garside" + std::to_string(strands);
  s.total = true;
  s.make = [strands](const Word& w) {
    GarsideResult res = garside_normal_form(strands, w);
    RunRecord rec;
    rec.status = StepStatus::Decided;
    rec.answer = res.form.trivial() ? Answer::InLanguage : Answer::NotInLanguage;
    rec.steps = std::max<std::uint64_t>(res.cost, std::max<std::uint64_t>(w.size(), 1));
    return std::make_unique<StepMachine>(rec);
  };
  return s;
}

Word forget_strands(int strands, const Word& pure_braid, std::size_t keep) {
  if (keep < 2 || static_cast<int>(keep) > strands)
    throw std::invalid_argument("bad keep count");
  if (!is_pure(strands, pure_braid))
    throw std::invalid_argument("forget_strands needs a pure braid");
  std::vector<std::uint32_t> ids(strands);
  for (int i = 0; i < strands; ++i) ids[i] = static_cast<std::uint32_t>(i);
  Word out;
  for (const Letter& l : pure_braid) {
    std::uint32_t pos = l.gen();
    std::uint32_t u = ids[pos], v = ids[pos + 1];
    if (u < keep && v < keep) {
      std::uint32_t kept_upto = 0;
      for (std::uint32_t x = 0; x <= pos; ++x)
        if (ids[x] < keep) ++kept_upto;
      out.push_back(Letter(kept_upto - 1, l.sign()));
    }
    std::swap(ids[pos], ids[pos + 1]);
  }
  return out;
}

Mat2 Mat2::identity() {
  return Mat2{BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2{a * o.a + b * o.c, a * o.b + b * o.d,
              c * o.a + d * o.c, c * o.b + d * o.d};
}

std::size_t Mat2::max_bit_length() const {
  return std::max(std::max(a.bit_length(), b.bit_length()),
                  std::max(c.bit_length(), d.bit_length()));
}

namespace {

Mat2 sl2_letter(const Letter& l) {
  if (l.gen() == 0) {
    return l.sign() > 0 ? Mat2{BigInt(1), BigInt(1), BigInt(0), BigInt(1)}
                        : Mat2{BigInt(1), BigInt(-1), BigInt(0), BigInt(1)};
  }
  if (l.gen() == 1) {
    return l.sign() > 0 ? Mat2{BigInt(1), BigInt(0), BigInt(-1), BigInt(1)}
                        : Mat2{BigInt(1), BigInt(0), BigInt(1), BigInt(1)};
  }
  throw std::invalid_argument("sl2_eval expects a 3-strand braid word");
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Mat2Mod mat2mod_identity(std::uint64_t p) { return Mat2Mod{1, 0, 0, 1, p}; }

Mat2Mod mat2mod_mul(const Mat2Mod& x, const Mat2Mod& y) {
  using u128 = unsigned __int128;
  std::uint64_t p = x.p;
  auto mul = [p](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
  };
  auto add = [p](std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  };
  return Mat2Mod{add(mul(x.a, y.a), mul(x.b, y.c)),
                 add(mul(x.a, y.b), mul(x.b, y.d)),
                 add(mul(x.c, y.a), mul(x.d, y.c)),
                 add(mul(x.c, y.b), mul(x.d, y.d)),
                 p};
}

Mat2Mod sl2_letter_mod(const Letter& l, std::uint64_t p) {
  std::uint64_t minus1 = p - 1;
  if (l.gen() == 0)
    return l.sign() > 0 ? Mat2Mod{1, 1, 0, 1, p} : Mat2Mod{1, minus1, 0, 1, p};
  if (l.gen() == 1)
    return l.sign() > 0 ? Mat2Mod{1, 0, minus1, 1, p} : Mat2Mod{1, 0, 1, 1, p};
  throw std::invalid_argument("sl2_eval expects a 3-strand braid word");
}

}  // namespace

Mat2 sl2_eval(const Word& b3_braid) {
  Mat2 m = Mat2::identity();
  for (const Letter& l : b3_braid) m = m * sl2_letter(l);
  return m;
}

Mat2Mod sl2_eval_mod(const Word& b3_braid, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("modulus must be prime");
  Mat2Mod m = mat2mod_identity(p);
  for (const Letter& l : b3_braid) m = mat2mod_mul(m, sl2_letter_mod(l, p));
  return m;
}

Solver braid_filter(int strands, Sl2Mode mode, std::uint64_t p) {
  if (strands < 3)
    throw std::invalid_argument("braid filter needs at least 3 strands");
  if (mode == Sl2Mode::ModP && !is_prime_u64(p))
    throw std::invalid_argument("modulus must be prime");
  Solver s;
  s.name = std::string("braidfilter") + (mode == Sl2Mode::Exact ? ":exact" : "");
  s.total = false;
  s.make = [strands, mode, p](const Word& w) {
    std::uint64_t cost = std::max<std::uint64_t>(w.size(), 1);
    if (!is_pure(strands, w)) {
      RunRecord rec{StepStatus::Decided, Answer::NotInLanguage, cost};
      return std::make_unique<StepMachine>(rec);
    }
    Word b3 = forget_strands(strands, w, 3);
    cost += w.size();
    bool nontrivial_image;
    if (mode == Sl2Mode::ModP) {
      cost += b3.size();
      nontrivial_image = !sl2_eval_mod(b3, p).is_identity();
    } else {
      Mat2 m = Mat2::identity();
      for (const Letter& l : b3) {
        m = m * sl2_letter(l);
        cost += std::max<std::size_t>(std::size_t{1}, (m.max_bit_length() + 63) / 64);
      }
      nontrivial_image = !(m == Mat2::identity());
    }
    RunRecord rec;
    rec.steps = std::max<std::uint64_t>(cost, 1);
    if (nontrivial_image) {
      rec.status = StepStatus::Decided;
      rec.answer = Answer::NotInLanguage;
    } else {
      rec.status = StepStatus::UndecidedFinal;
    }
    return std::make_unique<StepMachine>(rec);
  };
  return s;
}

BraidPipeline braid_pipeline(int strands, Sl2Mode mode, std::uint64_t p) {
  if (strands < 3)
    throw std::invalid_argument("braid pipeline needs at least 3 strands");
  BraidPipeline bp;
  bp.total = garside_solver(strands);
  bp.filter = braid_filter(strands, mode, p);
  bp.combined = parallel_combine(bp.total, bp.filter);
  return bp;
}

}  // namespace gencase
