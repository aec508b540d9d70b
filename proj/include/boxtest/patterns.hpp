#pragma once

#include "boxtest/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace boxtest {

// Pattern machinery works on small integer coordinates (everything here is
// fed normalized configurations, whose coordinates fit comfortably).
using GridPoint = std::vector<long long>;
using PointList = std::vector<GridPoint>;

enum class PatternKind { induced_rectangle, z_shape, star };

std::string to_string(PatternKind kind);
PatternKind pattern_kind_from_string(const std::string& name);

struct PatternHit {
  PointList points; // reporting order: rectangle corners sorted; (w,x,y,z); (center, tips)
};

struct PatternOptions {
  // Z-shapes are matched in one orientation; this also admits the mirror
  // image (the S-shape).
  bool mirrored_z = false;
};

// First occurrence of the pattern in deterministic enumeration order, or
// nullopt. induced_rectangle and z_shape require dim == 2; star uses dim
// tips, one per axis, at any distance. Duplicate input points are ignored.
std::optional<PatternHit> find_pattern(const PointList& points, PatternKind kind,
                                       int dim, const PatternOptions& options = {});

struct StabResult {
  bool ok = false;
  std::optional<PatternHit> unstabbed; // first occurrence with empty interior
};

// ok iff every occurrence of the pattern in `points` has a stabber strictly
// inside its bounding box.
StabResult stabs(const PointList& stabbers, const PointList& points, PatternKind kind,
                 int dim, const PatternOptions& options = {});

struct IntBox {
  std::vector<long long> lo;
  std::vector<long long> hi;
};

// Certified pattern-capacity bound of a box covering sides[i] grid points
// per axis:
//   induced_rectangle: ceil(sqrt(p))*q + p with p >= q
//   z_shape:           kZShapeSlack * (p + q)
//   star:              sum_i prod_{j != i} sides[j]   (d*p^(d-1) on cubes)
long long pattern_weight(const std::vector<long long>& sides, PatternKind kind);

// Smallest integer slack making the z_shape weight dominate the exact
// pattern-free maxima on all grids up to 5x5; the calibration is asserted
// in the test suite.
inline constexpr long long kZShapeSlack = 2;

struct Covering {
  int grid_side = 0;
  int dim = 2;
  PatternKind scheme = PatternKind::induced_rectangle;
  std::vector<IntBox> boxes;
};

struct CoverOptions {
  int split_axis = 0; // boxes are split by a hyperplane normal to this axis
};

// Regular base decomposition for the scheme (k^2 x k tiles, k x k squares,
// or side n^(1-1/d) hypercubes), then one split per point of `avoid`
// strictly interior to a box. Grids whose side is not the required perfect
// power are padded up to the next one.
Covering cover(int n, int dim, const PointList& avoid, PatternKind scheme,
               const CoverOptions& options = {});

struct BoxWeight {
  std::size_t index;
  std::vector<long long> sides;
  long long weight;
};

struct WeightReport {
  PatternKind scheme = PatternKind::induced_rectangle;
  std::vector<BoxWeight> boxes;
  long long total = 0;
};

struct CoveringCheck {
  bool ok = false;
  std::optional<GridPoint> uncovered;      // grid point missed by every box
  std::optional<std::size_t> invalid_box;  // box with an avoid-point inside
  std::optional<GridPoint> violating_point;
  WeightReport report;
};

CoveringCheck covering_check(const Covering& covering, const PointList& avoid);

// The k x k macro-grid of k^2 x k^2 cells, each carrying k evenly spaced
// diagonal points; k^3 points in [k^3]^2.
PointList hard_instance(int k);

// Exact maximum number of points placeable on the grid (sides[i] points per
// axis) without an occurrence of the pattern. Rectangle and Z-shape run an
// exact dynamic program over rows/columns; stars run branch-and-bound with
// an empty-line bound. cell_budget 0 means the per-kind default (25 cells
// for the planar kinds, 4^d for stars).
long long brute_pattern_free_max(const std::vector<int>& sides, PatternKind kind,
                                 std::uint64_t cell_budget = 0);

// Conversions from exact configurations (coordinates must fit in int64).
PointList config_points_as_grid(const Config& config);
PointList box_corners(const Config& config);

} // namespace boxtest
