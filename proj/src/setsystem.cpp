#include "boxtest/setsystem.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace boxtest {

namespace {

// Lexicographically next k-combination of [0, m); false when exhausted.
bool next_combination(ItemSet& c, std::size_t m) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] + 1 <= m - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// rank-th k-combination of [0, m) in lexicographic order.
ItemSet unrank_combination(std::size_t m, std::size_t k, std::uint64_t rank) {
  ItemSet c;
  c.reserve(k);
  std::uint32_t value = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (;; ++value) {
      std::uint64_t below = saturating_choose(m - value - 1, k - i - 1);
      if (rank < below) break;
      rank -= below;
    }
    c.push_back(value);
    ++value;
  }
  return c;
}

BitVec signature_of(const SetSystem& sys, const ItemSet& items) {
  BitVec sig(sys.test_count());
  for (ItemIndex i : items) sig.or_with(sys.row(i));
  return sig;
}

int clamp_threads(int threads) {
  if (threads < 1) return 1;
  return std::min(threads, 256);
}

// Index from signature hash to every subset already enumerated with that
// hash. Hash hits are re-verified bit-exactly before a collision is
// reported, so hash collisions cannot produce false witnesses.
class SignatureIndex {
public:
  // Returns the earliest stored subset with the same signature, if any;
  // otherwise stores the subset.
  const ItemSet* probe_and_insert(const SetSystem& sys, std::uint64_t hash,
                                  const ItemSet& subset) {
    auto& bucket = buckets_[hash];
    if (!bucket.empty()) {
      BitVec sig = signature_of(sys, subset);
      for (const ItemSet& stored : bucket) {
        if (signature_of(sys, stored) == sig) return &stored;
      }
    }
    bucket.push_back(subset);
    return nullptr;
  }

private:
  std::unordered_map<std::uint64_t, std::vector<ItemSet>> buckets_;
};

std::vector<std::size_t> admissible_sizes(int t, SepMode mode, bool include_empty) {
  std::vector<std::size_t> sizes;
  if (mode == SepMode::exactly) {
    sizes.push_back(static_cast<std::size_t>(t));
  } else {
    if (include_empty) sizes.push_back(0);
    for (int k = 1; k <= t; ++k) sizes.push_back(static_cast<std::size_t>(k));
  }
  return sizes;
}

void check_verify_preconditions(const SetSystem& sys, int t) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  if (sys.item_count() <= static_cast<std::size_t>(t))
    throw std::invalid_argument("need more items than t");
}

} // namespace

std::uint64_t saturating_choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t factor = n - k + i;
    if (result > ~std::uint64_t(0) / factor) return ~std::uint64_t(0);
    result = result * factor / i;
  }
  return result;
}

SetSystem SetSystem::from_rows(std::size_t test_count,
                               const std::vector<std::vector<std::uint32_t>>& rows) {
  SetSystem sys(rows.size(), test_count);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::uint32_t test : rows[i]) {
      if (test >= test_count) throw std::out_of_range("test index out of range");
      sys.set_incident(i, test);
    }
  }
  return sys;
}

BitVec signature(const SetSystem& sys, const ItemSet& items) {
  for (ItemIndex i : items) {
    if (i >= sys.item_count()) throw std::out_of_range("item index out of range");
  }
  return signature_of(sys, items);
}

Outcome run_tests(const SetSystem& sys, const ItemSet& defectives) {
  return Outcome{signature(sys, defectives)};
}

VerifyResult verify_separable(const SetSystem& sys, int t, SepMode mode,
                              const VerifyOptions& options) {
  check_verify_preconditions(sys, t);
  const std::size_t m = sys.item_count();
  const auto sizes = admissible_sizes(t, mode, options.include_empty);

  std::uint64_t total = 0;
  for (std::size_t k : sizes) {
    std::uint64_t c = saturating_choose(m, k);
    total = (total > ~std::uint64_t(0) - c) ? ~std::uint64_t(0) : total + c;
  }
  if (total > options.budget)
    throw BudgetError("verify_separable: subset count exceeds budget");

  const int threads = clamp_threads(options.threads);
  SignatureIndex index;
  VerifyResult result;
  result.ok = true;

  for (std::size_t k : sizes) {
    const std::uint64_t count = saturating_choose(m, k);
    std::uint64_t done = 0;
    while (done < count) {
      // Hash computation is the hot path; compute a block in parallel and
      // commit sequentially so the reported witness matches the
      // single-threaded enumeration bit for bit.
      const std::uint64_t block = std::min<std::uint64_t>(count - done, 1u << 20);
      std::vector<std::uint64_t> hashes(static_cast<std::size_t>(block));
      auto compute_range = [&](std::uint64_t lo, std::uint64_t hi) {
        if (lo >= hi) return;
        ItemSet subset = unrank_combination(m, k, done + lo);
        for (std::uint64_t r = lo; r < hi; ++r) {
          hashes[static_cast<std::size_t>(r)] = signature_of(sys, subset).hash();
          if (r + 1 < hi) next_combination(subset, m);
        }
      };
      if (threads == 1 || block < 4096) {
        compute_range(0, block);
      } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (block + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
          std::uint64_t lo = std::min<std::uint64_t>(block, w * chunk);
          std::uint64_t hi = std::min<std::uint64_t>(block, lo + chunk);
          pool.emplace_back(compute_range, lo, hi);
        }
        for (auto& th : pool) th.join();
      }

      ItemSet subset = unrank_combination(m, k, done);
      for (std::uint64_t r = 0; r < block; ++r) {
        ++result.enumerated;
        const ItemSet* earlier =
            index.probe_and_insert(sys, hashes[static_cast<std::size_t>(r)], subset);
        if (earlier) {
          result.ok = false;
          result.witness = Witness{Witness::Kind::separability_collision, *earlier,
                                   subset, 0};
          return result;
        }
        if (r + 1 < block) next_combination(subset, m);
      }
      done += block;
    }
  }
  return result;
}

namespace {

struct DisjunctCandidate {
  ItemIndex item;
  BitVec trace;
};

// Searches one item for a covering t-subset. Returns the witness core
// (possibly smaller than t; the caller pads) or nullopt.
std::optional<ItemSet> find_cover_core(const SetSystem& sys, ItemIndex x, int t) {
  const BitVec& sx = sys.row(x);
  if (sx.none()) return ItemSet{}; // empty union already covers

  std::vector<DisjunctCandidate> candidates;
  for (ItemIndex y = 0; y < sys.item_count(); ++y) {
    if (y == x) continue;
    BitVec trace = sys.row(y).intersect(sx);
    if (trace.none()) continue;
    bool duplicate = false;
    for (const auto& c : candidates) {
      if (c.trace == trace) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) candidates.push_back({y, std::move(trace)});
  }

  // Keep only trace-maximal candidates; replacing a dominated candidate by
  // its dominator never turns a cover into a non-cover, so the verdict is
  // unchanged.
  std::vector<DisjunctCandidate> maximal;
  for (const auto& c : candidates) {
    bool dominated = false;
    for (const auto& other : candidates) {
      if (other.item != c.item && c.trace.is_subset_of(other.trace) &&
          !(other.trace == c.trace)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(c);
  }

  BitVec reachable(sys.test_count());
  for (const auto& c : maximal) reachable.or_with(c.trace);
  if (!sx.is_subset_of(reachable)) return std::nullopt;

  const std::size_t limit = std::min<std::size_t>(maximal.size(), static_cast<std::size_t>(t));
  for (std::size_t s = 1; s <= limit; ++s) {
    ItemSet positions(s);
    for (std::size_t i = 0; i < s; ++i) positions[i] = static_cast<ItemIndex>(i);
    do {
      BitVec covered(sys.test_count());
      for (ItemIndex pos : positions) covered.or_with(maximal[pos].trace);
      if (sx.is_subset_of(covered)) {
        ItemSet core;
        for (ItemIndex pos : positions) core.push_back(maximal[pos].item);
        std::sort(core.begin(), core.end());
        return core;
      }
    } while (next_combination(positions, maximal.size()));
  }
  return std::nullopt;
}

Witness pad_cover_witness(const SetSystem& sys, ItemIndex x, ItemSet core, int t) {
  for (ItemIndex y = 0; core.size() < static_cast<std::size_t>(t) && y < sys.item_count();
       ++y) {
    if (y == x) continue;
    if (std::find(core.begin(), core.end(), y) == core.end()) core.push_back(y);
  }
  std::sort(core.begin(), core.end());
  return Witness{Witness::Kind::disjunct_cover, std::move(core), {}, x};
}

std::uint64_t disjunct_search_bound(const SetSystem& sys, int t) {
  std::uint64_t total = 0;
  for (ItemIndex x = 0; x < sys.item_count(); ++x) {
    const BitVec& sx = sys.row(x);
    std::size_t cands = 0;
    for (ItemIndex y = 0; y < sys.item_count(); ++y) {
      if (y != x && sys.row(y).intersect(sx).any()) ++cands;
    }
    for (int s = 1; s <= t; ++s) {
      std::uint64_t c = saturating_choose(cands, static_cast<std::uint64_t>(s));
      total = (total > ~std::uint64_t(0) - c) ? ~std::uint64_t(0) : total + c;
    }
  }
  return total;
}

} // namespace

VerifyResult verify_disjunct(const SetSystem& sys, int t, const VerifyOptions& options) {
  check_verify_preconditions(sys, t);
  if (disjunct_search_bound(sys, t) > options.budget)
    throw BudgetError("verify_disjunct: cover-search space exceeds budget");

  const std::size_t m = sys.item_count();
  const int threads = clamp_threads(options.threads);

  VerifyResult result;
  result.ok = true;
  result.enumerated = m;

  if (threads == 1 || m < 64) {
    for (ItemIndex x = 0; x < m; ++x) {
      auto core = find_cover_core(sys, x, t);
      if (core) {
        result.ok = false;
        result.witness = pad_cover_witness(sys, x, std::move(*core), t);
        return result;
      }
    }
    return result;
  }

  // Workers scan disjoint item ranges; the reducer keeps the smallest item
  // index, matching the sequential scan.
  std::vector<std::optional<Witness>> found(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (m + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w]() {
      const std::size_t lo = std::min(m, w * chunk);
      const std::size_t hi = std::min(m, lo + chunk);
      for (ItemIndex x = static_cast<ItemIndex>(lo); x < hi; ++x) {
        auto core = find_cover_core(sys, x, t);
        if (core) {
          found[w] = pad_cover_witness(sys, x, std::move(*core), t);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& w : found) {
    if (w) {
      result.ok = false;
      result.witness = std::move(w);
      return result;
    }
  }
  return result;
}

DecodeResult decode_disjunct(const SetSystem& sys, const Outcome& outcome, int t) {
  if (t < 0) throw std::invalid_argument("t must be non-negative");
  if (outcome.results.size() != sys.test_count())
    throw std::invalid_argument("outcome width mismatch");
  ItemSet survivors;
  for (ItemIndex i = 0; i < sys.item_count(); ++i) {
    if (sys.row(i).is_subset_of(outcome.results)) survivors.push_back(i);
  }
  if (survivors.size() == static_cast<std::size_t>(t))
    return DecodeResult{DecodeResult::Status::ok, std::move(survivors), std::nullopt};
  return DecodeResult{DecodeResult::Status::cardinality_mismatch, std::move(survivors),
                      std::nullopt};
}

DecodeResult decode_by_signature(const SetSystem& sys, const Outcome& outcome, int t,
                                 SepMode mode, const VerifyOptions& options) {
  if (t < 0) throw std::invalid_argument("t must be non-negative");
  if (outcome.results.size() != sys.test_count())
    throw std::invalid_argument("outcome width mismatch");
  const std::size_t m = sys.item_count();

  std::vector<std::size_t> sizes;
  if (mode == SepMode::exactly) {
    sizes.push_back(static_cast<std::size_t>(t));
  } else {
    if (options.include_empty) sizes.push_back(0);
    for (int k = 1; k <= t; ++k) sizes.push_back(static_cast<std::size_t>(k));
  }

  std::uint64_t total = 0;
  for (std::size_t k : sizes) {
    std::uint64_t c = saturating_choose(m, k);
    total = (total > ~std::uint64_t(0) - c) ? ~std::uint64_t(0) : total + c;
  }
  if (total > options.budget)
    throw BudgetError("decode_by_signature: subset count exceeds budget");

  std::optional<ItemSet> match;
  for (std::size_t k : sizes) {
    if (k > m) continue;
    ItemSet subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = static_cast<ItemIndex>(i);
    std::uint64_t count = saturating_choose(m, k);
    for (std::uint64_t r = 0; r < count; ++r) {
      if (signature_of(sys, subset) == outcome.results) {
        if (match) {
          Witness w{Witness::Kind::separability_collision, *match, subset, 0};
          return DecodeResult{DecodeResult::Status::ambiguous, {}, std::move(w)};
        }
        match = subset;
      }
      if (r + 1 < count) next_combination(subset, m);
    }
  }
  if (!match) return DecodeResult{DecodeResult::Status::no_match, {}, std::nullopt};
  return DecodeResult{DecodeResult::Status::ok, std::move(*match), std::nullopt};
}

} // namespace boxtest
