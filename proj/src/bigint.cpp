#include "boxtest/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxtest {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
} // namespace

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // Negate via unsigned arithmetic so LLONG_MIN is handled.
  std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffull));
    mag >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int BigInt::compare_magnitude(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

void BigInt::add_magnitude(std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t sum = carry + a[i] + (i < b.size() ? b[i] : 0);
    a[i] = static_cast<std::uint32_t>(sum & 0xffffffffull);
    carry = sum >> 32;
  }
  if (carry) a.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::sub_magnitude(std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) {
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                        (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    a[i] = static_cast<std::uint32_t>(diff);
  }
}

std::strong_ordering BigInt::operator<=>(const BigInt& other) const {
  if (sign_ != other.sign_) return sign_ <=> other.sign_;
  int mag = compare_magnitude(limbs_, other.limbs_);
  if (sign_ < 0) mag = -mag;
  return mag <=> 0;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& other) {
  if (other.sign_ == 0) return *this;
  if (sign_ == 0) return *this = other;
  if (sign_ == other.sign_) {
    add_magnitude(limbs_, other.limbs_);
    return *this;
  }
  int cmp = compare_magnitude(limbs_, other.limbs_);
  if (cmp == 0) {
    sign_ = 0;
    limbs_.clear();
  } else if (cmp > 0) {
    sub_magnitude(limbs_, other.limbs_);
    trim();
  } else {
    std::vector<std::uint32_t> mag = other.limbs_;
    sub_magnitude(mag, limbs_);
    limbs_ = std::move(mag);
    sign_ = other.sign_;
    trim();
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& other) { return *this += -other; }

BigInt& BigInt::operator*=(const BigInt& other) {
  if (sign_ == 0 || other.sign_ == 0) {
    sign_ = 0;
    limbs_.clear();
    return *this;
  }
  std::vector<std::uint32_t> out(limbs_.size() + other.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
      std::uint64_t cur = out[i + j] +
                          static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
    }
    std::size_t k = i + other.limbs_.size();
    while (carry) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
      ++k;
    }
  }
  limbs_ = std::move(out);
  sign_ *= other.sign_;
  trim();
  return *this;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  if (limbs_.size() < 2) return true;
  std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
  if (sign_ > 0) return mag <= 0x7fffffffffffffffull;
  return mag <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt does not fit in int64");
  std::uint64_t mag = 0;
  if (limbs_.size() > 1) mag = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) mag |= limbs_[0];
  if (sign_ < 0) return static_cast<long long>(~mag + 1);
  return static_cast<long long>(mag);
}

BigInt BigInt::from_string(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("BigInt: empty string");
  BigInt result;
  const BigInt chunk_scale(1000000000ll);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t take = std::min<std::size_t>(9, s.size() - pos);
    long long chunk = 0;
    long long scale = 1;
    for (std::size_t i = 0; i < take; ++i) {
      char c = s[pos + i];
      if (c < '0' || c > '9') throw std::invalid_argument("BigInt: invalid digit");
      chunk = chunk * 10 + (c - '0');
      scale *= 10;
    }
    result *= take == 9 ? chunk_scale : BigInt(scale);
    result += BigInt(chunk);
    pos += take;
  }
  if (negative) result = -result;
  return result;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<std::uint32_t> mag = limbs_;
  std::string digits;
  while (!mag.empty()) {
    // Divide the magnitude by 10^9 in place, collecting the remainder.
    std::uint64_t rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
      rem = cur % 1000000000ull;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::size_t BigInt::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(sign_ + 2);
  for (std::uint32_t limb : limbs_) {
    h ^= limb + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

} // namespace boxtest
