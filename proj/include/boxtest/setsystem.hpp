#pragma once

#include "boxtest/bitvec.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace boxtest {

// Thrown when a verifier or decoder would enumerate more subsets than the
// configured budget allows. An explicit refusal, never silent truncation.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a self-checking generator detects that its output is not
// combinatorially equivalent to its reference construction.
struct SelfCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

using ItemIndex = std::uint32_t;
using ItemSet = std::vector<ItemIndex>; // strictly increasing indices

// Abstract incidence structure: m items, n tests, one bit row per item.
// Duplicate rows are legal; the verifiers detect them rather than reject.
class SetSystem {
public:
  SetSystem(std::size_t item_count, std::size_t test_count)
      : test_count_(test_count), rows_(item_count, BitVec(test_count)) {
    if (item_count == 0) throw std::invalid_argument("SetSystem: need at least one item");
  }

  static SetSystem from_rows(std::size_t test_count,
                             const std::vector<std::vector<std::uint32_t>>& rows);

  std::size_t item_count() const { return rows_.size(); }
  std::size_t test_count() const { return test_count_; }

  const BitVec& row(std::size_t item) const { return rows_.at(item); }
  void set_incident(std::size_t item, std::size_t test) { rows_.at(item).set(test); }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

  std::vector<std::string> item_labels; // empty when unlabeled
  std::vector<std::string> test_labels;

private:
  std::size_t test_count_;
  std::vector<BitVec> rows_;
};

// Union of the incidence rows over a subset of items; the signature of the
// empty subset is all-false.
BitVec signature(const SetSystem& sys, const ItemSet& items);

struct Outcome {
  BitVec results; // true = positive test
};

Outcome run_tests(const SetSystem& sys, const ItemSet& defectives);

enum class SepMode { exactly, at_most };

struct Witness {
  enum class Kind { separability_collision, disjunct_cover };
  Kind kind;
  // separability_collision: subset_a = Y (earlier in enumeration order),
  // subset_b = Z, with signature(Y) == signature(Z) and Y != Z.
  // disjunct_cover: item = x, subset_a = Y with x not in Y and
  // signature({x}) a subset of signature(Y).
  ItemSet subset_a;
  ItemSet subset_b;
  ItemIndex item = 0;
};

struct VerifyOptions {
  std::uint64_t budget = 100'000'000; // max enumerated subsets
  int threads = 1;                    // workers; 1 is the bit-identical baseline
  bool include_empty = true;          // at_most mode: admit the empty subset
};

struct VerifyResult {
  bool ok = false;
  std::optional<Witness> witness;
  std::uint64_t enumerated = 0;
};

// Enumeration order is size-major, lexicographic within each size; exactly
// mode visits only size t. The reported collision pairs the current subset
// with the earliest prior subset carrying the same signature, so the
// witness is deterministic regardless of thread count.
VerifyResult verify_separable(const SetSystem& sys, int t, SepMode mode,
                              const VerifyOptions& options = {});

VerifyResult verify_disjunct(const SetSystem& sys, int t,
                             const VerifyOptions& options = {});

struct DecodeResult {
  enum class Status { ok, cardinality_mismatch, no_match, ambiguous };
  Status status;
  // ok: the decoded defective set. cardinality_mismatch: all surviving items.
  ItemSet items;
  std::optional<Witness> witness; // ambiguous: the colliding pair
};

// Keeps every item whose row is contained in the positive set; errors when
// the survivor count differs from t.
DecodeResult decode_disjunct(const SetSystem& sys, const Outcome& outcome, int t);

// Enumerates admissible subsets and returns the unique one whose signature
// equals the outcome; a second match is itself a separability refutation.
DecodeResult decode_by_signature(const SetSystem& sys, const Outcome& outcome, int t,
                                 SepMode mode, const VerifyOptions& options = {});

// C(n, k) saturating at UINT64_MAX.
std::uint64_t saturating_choose(std::uint64_t n, std::uint64_t k);

} // namespace boxtest
