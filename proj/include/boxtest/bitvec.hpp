#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace boxtest {

// Fixed-width bit vector used for incidence rows and test signatures.
// Invariant: bits beyond size() are zero, so equality and hashing are
// plain word comparisons.
class BitVec {
public:
  BitVec() = default;
  explicit BitVec(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    check(i);
    return (words_[i / 64] >> (i % 64)) & 1u;
  }

  void set(std::size_t i, bool value = true) {
    check(i);
    if (value)
      words_[i / 64] |= 1ull << (i % 64);
    else
      words_[i / 64] &= ~(1ull << (i % 64));
  }

  void or_with(const BitVec& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVec width mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  }

  bool is_subset_of(const BitVec& other) const {
    if (other.size_ != size_) throw std::invalid_argument("BitVec width mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  void clear() {
    for (std::uint64_t& w : words_) w = 0;
  }

  std::vector<std::uint32_t> set_bits() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < size_; ++i)
      if (test(i)) out.push_back(static_cast<std::uint32_t>(i));
    return out;
  }

  BitVec intersect(const BitVec& other) const {
    if (other.size_ != size_) throw std::invalid_argument("BitVec width mismatch");
    BitVec out(size_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      out.words_[w] = words_[w] & other.words_[w];
    return out;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 0xff51afd7ed558ccdull;
      h ^= h >> 33;
    }
    return h;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;

  void check(std::size_t i) const {
    if (i >= size_) throw std::out_of_range("BitVec index out of range");
  }
};

} // namespace boxtest
