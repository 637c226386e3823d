#include "gencase/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gencase {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

}  // namespace

BigInt::BigInt(std::int64_t v) {
  if (v < 0) {
    negative_ = true;
    // avoid overflow on INT64_MIN
    limbs_.push_back(static_cast<u64>(-(v + 1)) + 1);
  } else if (v > 0) {
    limbs_.push_back(static_cast<u64>(v));
  }
}

BigInt::BigInt(std::uint64_t v) {
  if (v != 0) limbs_.push_back(v);
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  u64 top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 64;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int BigInt::cmp(const BigInt& o) const {
  if (negative_ != o.negative_) return negative_ ? -1 : 1;
  int m = cmp_mag(limbs_, o.limbs_);
  return negative_ ? -m : m;
}

std::vector<u64> BigInt::add_mag(const std::vector<u64>& a,
                                 const std::vector<u64>& b) {
  const auto& lo = a.size() >= b.size() ? b : a;
  const auto& hi = a.size() >= b.size() ? a : b;
  std::vector<u64> r;
  r.reserve(hi.size() + 1);
  u64 carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    u128 s = static_cast<u128>(hi[i]) + carry;
    if (i < lo.size()) s += lo[i];
    r.push_back(static_cast<u64>(s));
    carry = static_cast<u64>(s >> 64);
  }
  if (carry) r.push_back(carry);
  return r;
}

std::vector<u64> BigInt::sub_mag(const std::vector<u64>& a,
                                 const std::vector<u64>& b) {
  std::vector<u64> r;
  r.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    u128 lhs = a[i];
    u128 rhs = (i < b.size() ? b[i] : 0);
    u64 out;
    if (lhs >= rhs + static_cast<u128>(borrow ? 1 : 0)) {
      out = static_cast<u64>(lhs - rhs - (borrow ? 1 : 0));
      borrow = 0;
    } else {
      out = static_cast<u64>((static_cast<u128>(1) << 64) + lhs - rhs -
                             (borrow ? 1 : 0));
      borrow = 1;
    }
    r.push_back(out);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.limbs_.empty()) r.negative_ = !r.negative_;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  BigInt r;
  if (negative_ == o.negative_) {
    r.negative_ = negative_;
    r.limbs_ = add_mag(limbs_, o.limbs_);
  } else {
    int m = cmp_mag(limbs_, o.limbs_);
    if (m == 0) return BigInt();
    if (m > 0) {
      r.negative_ = negative_;
      r.limbs_ = sub_mag(limbs_, o.limbs_);
    } else {
      r.negative_ = o.negative_;
      r.limbs_ = sub_mag(o.limbs_, limbs_);
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  if (is_zero() || o.is_zero()) return BigInt();
  BigInt r;
  r.negative_ = negative_ != o.negative_;
  r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u64 carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
      u128 cur = static_cast<u128>(limbs_[i]) * o.limbs_[j] +
                 r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<u64>(cur);
      carry = static_cast<u64>(cur >> 64);
    }
    r.limbs_[i + o.limbs_.size()] += carry;
  }
  r.trim();
  return r;
}

void BigInt::mul_small(u64 m) {
  if (m == 0 || is_zero()) {
    limbs_.clear();
    negative_ = false;
    return;
  }
  u64 carry = 0;
  for (auto& limb : limbs_) {
    u128 cur = static_cast<u128>(limb) * m + carry;
    limb = static_cast<u64>(cur);
    carry = static_cast<u64>(cur >> 64);
  }
  if (carry) limbs_.push_back(carry);
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  // repeated division of the limb vector by 10^18
  std::vector<u64> mag = limbs_;
  constexpr u64 kChunk = 1000000000000000000ull;
  std::vector<u64> pieces;
  while (!mag.empty()) {
    u64 rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
      u128 cur = (static_cast<u128>(rem) << 64) | mag[i];
      mag[i] = static_cast<u64>(cur / kChunk);
      rem = static_cast<u64>(cur % kChunk);
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    pieces.push_back(rem);
  }
  std::string out = negative_ ? "-" : "";
  out += std::to_string(pieces.back());
  for (std::size_t i = pieces.size() - 1; i-- > 0;) {
    std::string part = std::to_string(pieces[i]);
    out += std::string(18 - part.size(), '0') + part;
  }
  return out;
}

namespace {

// mantissa in [0.5, 1) from the top two limbs; value = m * 2^bits
double top_mantissa(const std::vector<u64>& limbs, std::size_t bits) {
  std::size_t n = limbs.size();
  double t = static_cast<double>(limbs[n - 1]);
  if (n >= 2) t = t * 4294967296.0 * 4294967296.0 + static_cast<double>(limbs[n - 2]);
  std::size_t tbits = bits - (n >= 2 ? (n - 2) * 64 : (n - 1) * 64);
  return std::ldexp(t, -static_cast<int>(tbits));
}

}  // namespace

double BigInt::frexp_mantissa() const {
  if (is_zero()) return 0.0;
  return top_mantissa(limbs_, bit_length());
}

double BigInt::to_double() const {
  if (is_zero()) return 0.0;
  std::size_t bits = bit_length();
  double m = top_mantissa(limbs_, bits);
  double v = bits > 1000 ? HUGE_VAL : std::ldexp(m, static_cast<int>(bits));
  return negative_ ? -v : v;
}

BigInt BigInt::pow2(std::size_t e) {
  BigInt r;
  r.limbs_.assign(e / 64 + 1, 0);
  r.limbs_.back() = u64{1} << (e % 64);
  return r;
}

BigInt BigInt::pow(u64 base, u64 e) {
  BigInt r{std::int64_t{1}};
  BigInt b{base};
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

double Rational::to_double() const {
  if (num.is_zero()) return 0.0;
  std::ptrdiff_t shift = static_cast<std::ptrdiff_t>(num.bit_length()) -
                         static_cast<std::ptrdiff_t>(den.bit_length());
  double q = num.frexp_mantissa() / den.frexp_mantissa();
  double v = std::ldexp(q, static_cast<int>(shift));
  return (num.negative() != den.negative()) ? -v : v;
}

}  // namespace gencase
