#include <doctest.h>

#include "boxtest/bigint.hpp"
#include "boxtest/bitvec.hpp"
#include "boxtest/rng.hpp"

#include <limits>

using boxtest::BigInt;
using boxtest::BitVec;
using boxtest::SplitMix64;

TEST_CASE("BigInt round-trips decimal strings") {
  for (const char* s : {"0", "1", "-1", "42", "-99999999999999999999999999",
                        "123456789012345678901234567890"}) {
    CHECK(BigInt::from_string(s).to_string() == s);
  }
  CHECK(BigInt::from_string("+7").to_string() == "7");
  CHECK(BigInt::from_string("0000123").to_string() == "123");
  CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_string("12x"), std::invalid_argument);
}

TEST_CASE("BigInt matches 64-bit arithmetic on random operands") {
  SplitMix64 rng(12345);
  for (int i = 0; i < 2000; ++i) {
    long long a = static_cast<long long>(rng.next() % 2000001) - 1000000;
    long long b = static_cast<long long>(rng.next() % 2000001) - 1000000;
    BigInt A(a), B(b);
    CHECK((A + B).to_int64() == a + b);
    CHECK((A - B).to_int64() == a - b);
    CHECK((A * B).to_int64() == a * b);
    CHECK((A < B) == (a < b));
    CHECK((A == B) == (a == b));
  }
}

TEST_CASE("BigInt handles int64 boundaries") {
  const long long lo = std::numeric_limits<long long>::min();
  const long long hi = std::numeric_limits<long long>::max();
  CHECK(BigInt(lo).to_int64() == lo);
  CHECK(BigInt(hi).to_int64() == hi);
  CHECK(BigInt(lo).fits_int64());
  BigInt beyond = BigInt(hi) + BigInt(1);
  CHECK(!beyond.fits_int64());
  CHECK_THROWS_AS(beyond.to_int64(), std::overflow_error);
  CHECK(beyond.to_string() == "9223372036854775808");
}

TEST_CASE("BigInt multiplication grows past 64 bits exactly") {
  BigInt v(1);
  for (int i = 0; i < 40; ++i) v *= BigInt(10);
  CHECK(v.to_string() == "1" + std::string(40, '0'));
  CHECK((v - v).is_zero());
  CHECK((v * BigInt(0)).is_zero());
  CHECK(-v < v);
}

TEST_CASE("BitVec set/test/or/subset") {
  BitVec a(130), b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  CHECK(a.count() == 3);
  CHECK(a.test(64));
  CHECK(!a.test(63));
  b.set(64);
  CHECK(b.is_subset_of(a));
  CHECK(!a.is_subset_of(b));
  b.or_with(a);
  CHECK(b == a);
  CHECK(a.hash() == b.hash());
  CHECK(a.set_bits() == std::vector<std::uint32_t>{0, 64, 129});
  CHECK_THROWS_AS(a.set(130), std::out_of_range);
  CHECK_THROWS_AS(a.or_with(BitVec(10)), std::invalid_argument);
}

TEST_CASE("BitVec intersect") {
  BitVec a(10), b(10);
  a.set(1);
  a.set(5);
  b.set(5);
  b.set(7);
  BitVec c = a.intersect(b);
  CHECK(c.set_bits() == std::vector<std::uint32_t>{5});
}

TEST_CASE("splitmix64 is stable across runs") {
  SplitMix64 rng(7);
  CHECK(rng.next() == SplitMix64(7).next());
  SplitMix64 x(0);
  // Reference value of splitmix64 at seed 0, first output.
  CHECK(x.next() == 0xe220a8397b1dcdafull);
}
