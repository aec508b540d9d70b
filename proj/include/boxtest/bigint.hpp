#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace boxtest {

// Signed arbitrary-precision integer: sign plus little-endian base-2^32
// magnitude. Covers exactly what exact integer geometry needs — ordering,
// addition, subtraction, multiplication and decimal conversion. There is
// deliberately no general division.
//
// Invariant: limbs_ has no trailing zero limb; zero is sign_ == 0 with an
// empty limb vector, so defaulted equality is exact.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  // Parses an optional leading '-' followed by decimal digits.
  static BigInt from_string(std::string_view s);
  std::string to_string() const;

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  bool fits_int64() const;
  long long to_int64() const; // throws std::overflow_error if !fits_int64()

  friend bool operator==(const BigInt&, const BigInt&) = default;
  std::strong_ordering operator<=>(const BigInt& other) const;

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& other);
  BigInt& operator-=(const BigInt& other);
  BigInt& operator*=(const BigInt& other);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  std::size_t hash() const;

private:
  int sign_ = 0;
  std::vector<std::uint32_t> limbs_;

  void trim();
  static int compare_magnitude(const std::vector<std::uint32_t>& a,
                               const std::vector<std::uint32_t>& b);
  static void add_magnitude(std::vector<std::uint32_t>& a,
                            const std::vector<std::uint32_t>& b);
  // Requires |a| >= |b|.
  static void sub_magnitude(std::vector<std::uint32_t>& a,
                            const std::vector<std::uint32_t>& b);
};

} // namespace boxtest

template <> struct std::hash<boxtest::BigInt> {
  std::size_t operator()(const boxtest::BigInt& v) const { return v.hash(); }
};
