#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gencase {

/// Arbitrary-precision signed integer, sign-magnitude over 64-bit limbs.
/// Covers what the counting and matrix code needs: +, -, *, comparisons,
/// decimal printing and lossy conversion to double. No division.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);
  BigInt(std::uint64_t v);
  BigInt(int v) : BigInt(static_cast<std::int64_t>(v)) {}

  bool is_zero() const { return limbs_.empty(); }
  bool negative() const { return negative_; }
  /// Number of significant bits of the magnitude; 0 for zero.
  std::size_t bit_length() const;

  BigInt operator-() const;
  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  /// Multiply by a small non-negative scalar in place.
  void mul_small(std::uint64_t m);

  bool operator==(const BigInt& o) const {
    return negative_ == o.negative_ && limbs_ == o.limbs_;
  }
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const { return cmp(o) < 0; }
  bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
  bool operator>(const BigInt& o) const { return cmp(o) > 0; }
  bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }

  std::string to_string() const;
  double to_double() const;
  /// Mantissa m in [0.5, 1) with |value| = m * 2^bit_length(); 0 for zero.
  double frexp_mantissa() const;

  /// 2^e for e >= 0.
  static BigInt pow2(std::size_t e);
  /// b^e by repeated squaring, b >= 0.
  static BigInt pow(std::uint64_t base, std::uint64_t e);

 private:
  int cmp(const BigInt& o) const;
  static int cmp_mag(const std::vector<std::uint64_t>& a,
                     const std::vector<std::uint64_t>& b);
  static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b);
  void trim();

  bool negative_ = false;
  std::vector<std::uint64_t> limbs_;  // little-endian, no trailing zeros
};

/// Exact non-negative rational, kept unreduced; equality by cross-multiplication.
struct Rational {
  BigInt num;
  BigInt den{std::int64_t{1}};

  bool equals(const Rational& o) const { return num * o.den == o.num * den; }
  bool equals(std::int64_t n, std::int64_t d) const {
    return equals(Rational{BigInt(n), BigInt(d)});
  }
  double to_double() const;
};

}  // namespace gencase
