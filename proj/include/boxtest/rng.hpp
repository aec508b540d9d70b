#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace boxtest {

// splitmix64: the seeded generator used everywhere randomness is needed,
// so identical seeds reproduce identical artifacts across platforms.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased value in [0, bound) via rejection sampling.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  // Splits off an independent stream; the child seed depends only on the
  // parent state, keeping nested use reproducible.
  SplitMix64 split() { return SplitMix64(next()); }
};

// k distinct values from [0, n), returned sorted.
inline std::vector<std::uint32_t> sample_distinct(SplitMix64& rng, std::uint32_t n,
                                                  std::uint32_t k) {
  std::vector<std::uint32_t> pool(n);
  for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
  for (std::uint32_t i = 0; i < k && i < n; ++i) {
    std::uint32_t j = i + static_cast<std::uint32_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k < n ? k : n);
  std::sort(pool.begin(), pool.end());
  return pool;
}

} // namespace boxtest
