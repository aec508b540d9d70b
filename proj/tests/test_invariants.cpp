#include <doctest.h>

#include "boxtest/constructions.hpp"
#include "boxtest/patterns.hpp"

using namespace boxtest;

namespace {

std::uint64_t int_pow(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) /
                                     static_cast<std::uint64_t>(i);
  return out;
}

// All grid points of a box, lexicographic.
PointList box_cells(const IntBox& box) {
  PointList cells;
  GridPoint cur = box.lo;
  for (;;) {
    cells.push_back(cur);
    int axis = static_cast<int>(cur.size()) - 1;
    while (axis >= 0 && cur[static_cast<std::size_t>(axis)] ==
                            box.hi[static_cast<std::size_t>(axis)]) {
      cur[static_cast<std::size_t>(axis)] = box.lo[static_cast<std::size_t>(axis)];
      --axis;
    }
    if (axis < 0) break;
    ++cur[static_cast<std::size_t>(axis)];
  }
  return cells;
}

} // namespace

TEST_CASE("size formulas hold across parameter sweeps") {
  for (int d = 1; d <= 4; ++d) {
    for (int n = 2; n <= (d >= 4 ? 2 : 4); ++n) {
      Config grid = grid_lines(n, d);
      CHECK(grid.points.size() == int_pow(static_cast<std::uint64_t>(n), d));
      CHECK(grid.boxes.size() ==
            static_cast<std::uint64_t>(d) * int_pow(static_cast<std::uint64_t>(n), d - 1));
    }
  }
  for (int d = 2; d <= 4; ++d) {
    for (int k = 1; k < d; ++k) {
      Config flats = subspace_config(k, d, 2);
      CHECK(flats.points.size() == int_pow(2, d));
      CHECK(flats.boxes.size() == binomial(d, k) * int_pow(2, d - k));
    }
  }
  for (int k = 1; k <= 3; ++k) {
    Config lifted = long_rect_step(disjoint_boxes(3, 2), k);
    CHECK(lifted.points.size() == static_cast<std::size_t>(3 * k));
    CHECK(lifted.boxes.size() == static_cast<std::size_t>(3 * k + 3));
  }
}

TEST_CASE("desk-scale generator claims all verify") {
  std::vector<Config> configs;
  configs.push_back(grid_lines(2, 2));
  configs.push_back(grid_lines(3, 2));
  configs.push_back(grid_lines(2, 3));
  configs.push_back(grid_lines(3, 3));
  configs.push_back(grid_lines(2, 4));
  configs.push_back(single_defective_grid(3));
  configs.push_back(disjoint_boxes(4, 2));
  configs.push_back(hyperplane_config(2, 2, 5));
  configs.push_back(hyperplane_config(1, 3, 4));
  configs.push_back(hyperplane_config(3, 1, 4));
  configs.push_back(subspace_config(2, 3, 3));
  configs.push_back(subspace_config(2, 4, 2));
  configs.push_back(project_subspace_config(2, 4, 2));
  configs.push_back(embed_grid_lines_2d(3, 3));
  configs.push_back(long_rect_step(single_defective_grid(3), 2));
  for (const Config& config : configs) {
    REQUIRE(config.claims.has_value());
    for (const ClaimCheck& check : verify_claims(config)) {
      INFO(config.claims->construction, ": ", check.claim);
      CHECK(check.ok);
    }
  }
}

TEST_CASE("overfilling a covering box beyond its weight forces the pattern") {
  // The pigeonhole step behind every covering bound: a box holding more
  // points than its certified weight must contain an occurrence.
  SUBCASE("rectangle tiles") {
    Covering covering = cover(27, 2, {}, PatternKind::induced_rectangle);
    const IntBox& box = covering.boxes.front(); // 9x3, weight 18, 27 cells
    REQUIRE(pattern_weight({9, 3}, PatternKind::induced_rectangle) == 18);
    PointList cells = box_cells(box);
    PointList stuffed(cells.begin(), cells.begin() + 19);
    CHECK(find_pattern(stuffed, PatternKind::induced_rectangle, 2).has_value());
  }
  SUBCASE("z-shape squares") {
    Covering covering = cover(36, 2, {}, PatternKind::z_shape);
    const IntBox& box = covering.boxes.front(); // 6x6, weight 24, 36 cells
    REQUIRE(pattern_weight({6, 6}, PatternKind::z_shape) == 24);
    PointList cells = box_cells(box);
    PointList stuffed(cells.begin(), cells.begin() + 25);
    CHECK(find_pattern(stuffed, PatternKind::z_shape, 2).has_value());
  }
  SUBCASE("star squares") {
    Covering covering = cover(9, 2, {}, PatternKind::star);
    const IntBox& box = covering.boxes.front(); // 3x3, weight 6, 9 cells
    REQUIRE(pattern_weight({3, 3}, PatternKind::star) == 6);
    PointList cells = box_cells(box);
    PointList stuffed(cells.begin(), cells.begin() + 7);
    CHECK(find_pattern(stuffed, PatternKind::star, 2).has_value());
  }
}

TEST_CASE("every prefix beyond the exact maximum contains the pattern") {
  // Sharper variant on one grid: the exact oracle says 18 points fit in
  // 9x3 without a rectangle is impossible beyond brute_pattern_free_max.
  const long long best = brute_pattern_free_max({3, 3}, PatternKind::induced_rectangle);
  CHECK(best == 6);
  // Any 7-point subset of the 3x3 grid contains an induced rectangle.
  PointList cells;
  for (long long x = 1; x <= 3; ++x)
    for (long long y = 1; y <= 3; ++y) cells.push_back({x, y});
  for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
    if (__builtin_popcount(mask) != 7) continue;
    PointList subset;
    for (std::size_t i = 0; i < 9; ++i)
      if (mask >> i & 1) subset.push_back(cells[i]);
    CHECK(find_pattern(subset, PatternKind::induced_rectangle, 2).has_value());
  }
}
