#pragma once

#include "boxtest/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace boxtest {

// A q-partition of an abstract item universe [0, universe_size).
struct Partition {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::uint32_t>> parts; // pairwise disjoint, covering
  std::vector<std::string> part_labels;
};

void validate(const Partition& partition);

// The [n]^d grid with every axis-parallel grid line as a degenerate box.
// n^d points, d*n^(d-1) tests.
Config grid_lines(int n, int d);

// Two-dimensional configuration combinatorially equivalent to
// grid_lines(n, d). Points are packed into two base-(n+1) integers whose
// orders are the lexicographic and reverse-lexicographic orders of the grid
// coordinates; each line maps to the minimal enclosing rectangle of its
// image. Self-checking: aborts if the induced systems differ.
Config embed_grid_lines_2d(int n, int d);

// l = (k-1)t+1 partitions of [m]^k, the i-th grouping points by the inner
// product with (1, i-1, (i-1)^2, ...). Empty classes are dropped.
std::vector<Partition> hyperplane_partitions(int k, int t, int m);

// Realizes partitions as points and degenerate boxes: item x becomes the
// point of its part indices, part j of partition i becomes the box fixing
// axis i to j with full span elsewhere.
Config partitions_to_boxes(const std::vector<Partition>& partitions,
                           const std::vector<std::string>& item_labels);

// partitions_to_boxes over hyperplane_partitions(k, t, m), with the
// t-disjunct claim attached. Dimension (k-1)t+1.
Config hyperplane_config(int k, int t, int m);

// One lift step: canonicalize (general position, coordinates in [m]), lay k
// shifted copies along axis 1, and add one long degenerate box per original
// point spanning all copies. Takes a t-disjunct input (per its claims) to a
// (t+1)-disjunct output with k*m points and k*n+m boxes.
Config long_rect_step(const Config& config, int k);

// Repeated long_rect_step from the hyperplane base at t = d-1 up to the
// requested t. Per-step copy counts default to ceil(points/boxes) and can
// be overridden.
Config long_rect_tower(int d, int t, int m,
                       const std::vector<int>& step_copies = {});

// The [m]^d grid with every axis-parallel k-flat as a degenerate box.
// m^d points, C(d,k)*m^(d-k) tests, (d-k)-disjunct.
Config subspace_config(int k, int d, int m);

// (d-1)-dimensional configuration combinatorially equivalent to
// subspace_config(k, d, m), via x -> ((m+1)x_1 + x_d, ..., (m+1)x_{d-1} + x_d)
// and minimal enclosing boxes. Requires k <= d-2. Self-checking.
Config project_subspace_config(int k, int d, int m);

// n*n points with one test per row and column; a single defective point is
// identified by its two positive tests.
Config single_defective_grid(int n);

// m points, each strictly inside its own box; t-disjunct for every t < m.
Config disjoint_boxes(int m, int d);

// Runs every claim attached to the configuration through the verifiers.
// Returns one line per claim; `ok` means the claim checked out (positive
// claims verify, negative claims produce a witness).
struct ClaimCheck {
  std::string claim;
  bool ok;
};
std::vector<ClaimCheck> verify_claims(const Config& config,
                                      const VerifyOptions& options = {});

} // namespace boxtest
