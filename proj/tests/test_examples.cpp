#include <doctest.h>

#include "boxtest/constructions.hpp"
#include "boxtest/io.hpp"

#include <algorithm>

using namespace boxtest;

TEST_CASE("a defective set realizing a cover witness breaks the discard decoder") {
  SetSystem sys = induce(grid_lines(3, 3));
  auto refuted = verify_disjunct(sys, 3);
  REQUIRE(!refuted.ok);
  const Witness& w = *refuted.witness;
  // Decoding the outcome of the covering set keeps x alive as well, so the
  // survivor set is a strict superset and the decoder must flag it.
  auto decoded = decode_disjunct(sys, run_tests(sys, w.subset_a), 3);
  CHECK(decoded.status == DecodeResult::Status::cardinality_mismatch);
  CHECK(decoded.items.size() > 3);
  for (ItemIndex y : w.subset_a)
    CHECK(std::find(decoded.items.begin(), decoded.items.end(), y) != decoded.items.end());
  CHECK(std::find(decoded.items.begin(), decoded.items.end(), w.item) !=
        decoded.items.end());
}

TEST_CASE("single defective on the grid triggers exactly two tests") {
  Config grid = single_defective_grid(4);
  SetSystem sys = induce(grid);
  for (ItemIndex d = 0; d < 16; ++d) {
    Outcome outcome = run_tests(sys, {d});
    CHECK(outcome.results.count() == 2);
    auto decoded = decode_disjunct(sys, outcome, 1);
    REQUIRE(decoded.status == DecodeResult::Status::ok);
    CHECK(decoded.items == ItemSet{d});
  }
}

TEST_CASE("two defectives sharing a line trigger three tests") {
  SetSystem sys = induce(grid_lines(3, 2));
  auto i1 = std::find(sys.item_labels.begin(), sys.item_labels.end(), "(1,1)");
  auto i2 = std::find(sys.item_labels.begin(), sys.item_labels.end(), "(1,2)");
  REQUIRE(i1 != sys.item_labels.end());
  REQUIRE(i2 != sys.item_labels.end());
  ItemSet defectives = {static_cast<ItemIndex>(i1 - sys.item_labels.begin()),
                        static_cast<ItemIndex>(i2 - sys.item_labels.begin())};
  std::sort(defectives.begin(), defectives.end());
  CHECK(run_tests(sys, defectives).results.count() == 3);
}

TEST_CASE("compression tames the large embedded coordinates") {
  Config embedded = embed_grid_lines_2d(3, 4); // coordinates up to (n+1)^3 * n
  Config small = compress_to_grid(embedded);
  const BigInt limit(4 * static_cast<long long>(embedded.boxes.size()));
  for (const Point& p : small.points)
    for (const BigInt& c : p.coords) CHECK(c <= limit);
  CHECK(induce(small) == induce(embedded));
}

TEST_CASE("compression brings long-rectangle spans into [1, 4n]") {
  Config lifted = long_rect_step(single_defective_grid(3), 3);
  Config small = compress_to_grid(lifted);
  const BigInt limit(4 * static_cast<long long>(lifted.boxes.size()));
  for (const Box& b : small.boxes) {
    for (const BigInt& c : b.lo) CHECK(BigInt(1) <= c);
    for (const BigInt& c : b.hi) CHECK(c <= limit);
  }
  CHECK(induce(small) == induce(lifted));
}

TEST_CASE("verification scales to the 4^3 grid") {
  SetSystem sys = induce(grid_lines(4, 3)); // 64 items, 48 lines
  CHECK(verify_disjunct(sys, 2).ok);
  CHECK(!verify_disjunct(sys, 3).ok);
  CHECK(verify_separable(sys, 3, SepMode::exactly).ok); // 41664 subsets
  CHECK(!verify_separable(sys, 4, SepMode::exactly).ok);
}

TEST_CASE("generate -> save -> load -> induce equals in-memory induce") {
  std::vector<Config> configs;
  configs.push_back(grid_lines(3, 2));
  configs.push_back(grid_lines(2, 3));
  configs.push_back(single_defective_grid(3));
  configs.push_back(disjoint_boxes(4, 2));
  configs.push_back(hyperplane_config(2, 2, 5));
  configs.push_back(subspace_config(2, 3, 3));
  configs.push_back(project_subspace_config(2, 4, 2));
  configs.push_back(embed_grid_lines_2d(2, 3));
  configs.push_back(long_rect_step(single_defective_grid(3), 2));
  configs.push_back(long_rect_tower(2, 2, 3, {1}));
  for (const Config& config : configs) {
    Config reloaded = config_from_json(config_to_json(config));
    CHECK(induce(reloaded) == induce(config));
    if (config.claims) {
      REQUIRE(reloaded.claims.has_value());
      CHECK(*reloaded.claims == *config.claims);
    }
  }
}

TEST_CASE("one-dimensional grid claims hold") {
  for (const ClaimCheck& check : verify_claims(grid_lines(2, 1))) CHECK(check.ok);
  for (const ClaimCheck& check : verify_claims(grid_lines(4, 1))) CHECK(check.ok);
}
