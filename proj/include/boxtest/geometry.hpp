#pragma once

#include "boxtest/bigint.hpp"
#include "boxtest/setsystem.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace boxtest {

struct Point {
  std::vector<BigInt> coords;

  friend bool operator==(const Point&, const Point&) = default;
};

// Closed axis-parallel box: the product of [lo_i, hi_i]. Thickness zero is
// legal on any axis, which is how lines and flats are represented.
struct Box {
  std::vector<BigInt> lo;
  std::vector<BigInt> hi;

  friend bool operator==(const Box&, const Box&) = default;
};

// Machine-checkable assertions a generator attaches to its output.
struct Claims {
  std::string construction;
  std::vector<std::pair<std::string, long long>> params;
  std::optional<int> disjunct;      // verified t-disjunct for this t
  std::optional<int> not_disjunct;  // a witness exists at this t
  std::optional<int> separable;     // t-separable (exactly mode)
  std::optional<int> not_separable; // a collision exists at this t

  friend bool operator==(const Claims&, const Claims&) = default;
};

struct Config {
  int dim = 0;
  std::vector<Point> points;
  std::vector<std::string> point_labels;
  std::vector<Box> boxes;
  std::vector<std::string> box_labels;
  std::optional<Claims> claims;
};

// Checks dimensions, box orientation (lo <= hi) and label uniqueness.
void validate(const Config& config);

bool contains(const Box& box, const Point& point);

// Incidence by containment: bit j of row i is set iff box j contains point
// i. Duplicate boxes stay distinct tests, so the test count always equals
// the box count.
SetSystem induce(const Config& config);

// True iff on every axis all point coordinates and box facet coordinates
// are pairwise distinct.
bool is_general_position(const Config& config);

// Combinatorially equivalent configuration in general position, computed
// exactly over the integers: every coordinate is scaled far apart, then
// points receive small distinct offsets and boxes are fattened by larger
// distinct amounts, so no containment can flip. Coincident points come out
// separated with their incidence rows unchanged.
Config to_general_position(const Config& config);

// Combinatorially equivalent configuration with every coordinate in
// [1, 4n], n = box count. Box facets occupy even slots, points are aligned
// per strip on odd slots; afterwards no facet hyperplane passes through a
// point. Throws when n == 0 and more than one point needs placing.
Config compress_to_grid(const Config& config);

} // namespace boxtest
