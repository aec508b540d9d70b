#include "boxtest/constructions.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace boxtest {

namespace {

// All tuples of [1, side]^dim in lexicographic order.
std::vector<std::vector<int>> grid_tuples(int side, int dim) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(dim, 1);
  for (;;) {
    out.push_back(cur);
    int axis = dim - 1;
    while (axis >= 0 && cur[axis] == side) {
      cur[axis] = 1;
      --axis;
    }
    if (axis < 0) break;
    ++cur[axis];
  }
  return out;
}

std::string tuple_label(const std::vector<int>& coords) {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords[i]);
  }
  s += ')';
  return s;
}

// Label of a flat: fixed coordinates shown, free axes as '*'.
std::string flat_label(const std::vector<int>& fixed, const std::vector<bool>& free_axis) {
  std::string s = "(";
  for (std::size_t i = 0; i < free_axis.size(); ++i) {
    if (i) s += ',';
    s += free_axis[i] ? "*" : std::to_string(fixed[i]);
  }
  s += ')';
  return s;
}

// Points [1, m]^d plus one degenerate box per axis-parallel k-flat meeting
// the grid. Accepts k == d (the whole grid as a single box).
Config flat_config(int k, int d, int m) {
  Config config;
  config.dim = d;
  for (const auto& tuple : grid_tuples(m, d)) {
    Point p;
    for (int c : tuple) p.coords.push_back(BigInt(c));
    config.points.push_back(std::move(p));
    config.point_labels.push_back(tuple_label(tuple));
  }

  // Axis subsets I of size k, lexicographic.
  std::vector<int> axes(k);
  for (int i = 0; i < k; ++i) axes[i] = i;
  for (;;) {
    std::vector<bool> free_axis(d, false);
    for (int a : axes) free_axis[a] = true;
    std::vector<int> fixed_axes;
    for (int i = 0; i < d; ++i)
      if (!free_axis[i]) fixed_axes.push_back(i);

    for (const auto& assignment : grid_tuples(m, d - k)) {
      std::vector<int> fixed(d, 0);
      for (std::size_t i = 0; i < fixed_axes.size(); ++i)
        fixed[fixed_axes[i]] = assignment[i];
      Box b;
      b.lo.resize(d);
      b.hi.resize(d);
      for (int i = 0; i < d; ++i) {
        if (free_axis[i]) {
          b.lo[i] = BigInt(1);
          b.hi[i] = BigInt(m);
        } else {
          b.lo[i] = BigInt(fixed[i]);
          b.hi[i] = BigInt(fixed[i]);
        }
      }
      config.boxes.push_back(std::move(b));
      config.box_labels.push_back(flat_label(fixed, free_axis));
    }

    int i = k - 1;
    while (i >= 0 && axes[i] == d - k + i) --i;
    if (i < 0) break;
    ++axes[i];
    for (int j = i + 1; j < k; ++j) axes[j] = axes[j - 1] + 1;
  }
  return config;
}

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::invalid_argument("hyperplane_partitions: parameters overflow");
  return out;
}

long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::invalid_argument("hyperplane_partitions: parameters overflow");
  return out;
}

} // namespace

void validate(const Partition& partition) {
  std::vector<char> seen(partition.universe_size, 0);
  std::size_t covered = 0;
  for (const auto& part : partition.parts) {
    for (std::uint32_t item : part) {
      if (item >= partition.universe_size)
        throw std::invalid_argument("Partition: item out of range");
      if (seen[item]) throw std::invalid_argument("Partition: parts not disjoint");
      seen[item] = 1;
      ++covered;
    }
  }
  if (covered != partition.universe_size)
    throw std::invalid_argument("Partition: parts do not cover the universe");
  if (!partition.part_labels.empty() &&
      partition.part_labels.size() != partition.parts.size())
    throw std::invalid_argument("Partition: label count mismatch");
}

Config grid_lines(int n, int d) {
  if (n < 2) throw std::invalid_argument("grid_lines: n must be >= 2");
  if (d < 1) throw std::invalid_argument("grid_lines: d must be >= 1");
  Config config = flat_config(1, d, n);
  Claims claims;
  claims.construction = "grid_lines";
  claims.params = {{"n", n}, {"d", d}};
  if (d >= 2) claims.disjunct = d - 1;
  claims.not_disjunct = d >= 2 ? d : 1;
  if (d == 1) {
    claims.not_separable = 1; // all points share the single test
  } else if (d == 2) {
    claims.separable = 1;
    claims.not_separable = 2;
  } else if (d == 3) {
    claims.separable = 3;
    claims.not_separable = 4;
  } else {
    claims.separable = 2 * d - 2;
    claims.not_separable = 2 * d - 1;
  }
  config.claims = std::move(claims);
  return config;
}

Config embed_grid_lines_2d(int n, int d) {
  if (n < 2) throw std::invalid_argument("embed_grid_lines_2d: n must be >= 2");
  if (d < 2) throw std::invalid_argument("embed_grid_lines_2d: d must be >= 2");
  Config source = grid_lines(n, d);

  // powers[j] = (n+1)^j
  std::vector<BigInt> powers(static_cast<std::size_t>(d));
  powers[0] = BigInt(1);
  for (int j = 1; j < d; ++j) powers[j] = powers[j - 1] * BigInt(n + 1);

  auto embed_point = [&](const Point& p) {
    BigInt first, second;
    for (int i = 0; i < d; ++i) {
      first += p.coords[i] * powers[d - 1 - i];
      second += p.coords[i] * powers[i];
    }
    Point out;
    out.coords = {std::move(first), std::move(second)};
    return out;
  };

  Config config;
  config.dim = 2;
  config.point_labels = source.point_labels;
  config.box_labels = source.box_labels;
  config.claims = source.claims;
  if (config.claims) {
    config.claims->construction = "embed_grid_lines_2d";
  }
  for (const Point& p : source.points) config.points.push_back(embed_point(p));

  for (const Box& line : source.boxes) {
    Box rect;
    bool first_point = true;
    for (const Point& p : source.points) {
      if (!contains(line, p)) continue;
      Point image = embed_point(p);
      if (first_point) {
        rect.lo = image.coords;
        rect.hi = image.coords;
        first_point = false;
      } else {
        for (int axis = 0; axis < 2; ++axis) {
          if (image.coords[axis] < rect.lo[axis]) rect.lo[axis] = image.coords[axis];
          if (rect.hi[axis] < image.coords[axis]) rect.hi[axis] = image.coords[axis];
        }
      }
    }
    config.boxes.push_back(std::move(rect));
  }

  SetSystem original = induce(source);
  SetSystem embedded = induce(config);
  if (!(original == embedded))
    throw SelfCheckError("embed_grid_lines_2d: embedding is not equivalent");
  return config;
}

std::vector<Partition> hyperplane_partitions(int k, int t, int m) {
  if (k < 1) throw std::invalid_argument("hyperplane_partitions: k must be >= 1");
  if (t < 1) throw std::invalid_argument("hyperplane_partitions: t must be >= 1");
  if (m <= k) throw std::invalid_argument("hyperplane_partitions: need m > k");
  const int levels = (k - 1) * t + 1;

  const auto tuples = grid_tuples(m, k);
  std::vector<Partition> partitions;
  partitions.reserve(static_cast<std::size_t>(levels));
  for (int i = 1; i <= levels; ++i) {
    std::vector<long long> coeff(static_cast<std::size_t>(k));
    coeff[0] = 1;
    for (int j = 1; j < k; ++j) coeff[j] = checked_mul(coeff[j - 1], i - 1);

    std::map<long long, std::vector<std::uint32_t>> classes;
    for (std::size_t idx = 0; idx < tuples.size(); ++idx) {
      long long value = 0;
      for (int j = 0; j < k; ++j)
        value = checked_add(value, checked_mul(coeff[j], tuples[idx][j]));
      classes[value].push_back(static_cast<std::uint32_t>(idx));
    }

    Partition partition;
    partition.universe_size = tuples.size();
    for (auto& [value, members] : classes) {
      partition.parts.push_back(std::move(members));
      partition.part_labels.push_back("c" + std::to_string(i) + "=" +
                                      std::to_string(value));
    }
    partitions.push_back(std::move(partition));
  }
  return partitions;
}

Config partitions_to_boxes(const std::vector<Partition>& partitions,
                           const std::vector<std::string>& item_labels) {
  if (partitions.empty())
    throw std::invalid_argument("partitions_to_boxes: need at least one partition");
  const std::size_t universe = partitions.front().universe_size;
  for (const Partition& p : partitions) {
    validate(p);
    if (p.universe_size != universe)
      throw std::invalid_argument("partitions_to_boxes: universes differ");
  }
  const int dim = static_cast<int>(partitions.size());

  // part_of[i][x] = 1-based part index of item x in partition i
  std::vector<std::vector<int>> part_of(partitions.size(),
                                        std::vector<int>(universe, 0));
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    for (std::size_t j = 0; j < partitions[i].parts.size(); ++j) {
      for (std::uint32_t item : partitions[i].parts[j])
        part_of[i][item] = static_cast<int>(j) + 1;
    }
  }

  Config config;
  config.dim = dim;
  for (std::size_t x = 0; x < universe; ++x) {
    Point p;
    for (std::size_t i = 0; i < partitions.size(); ++i)
      p.coords.push_back(BigInt(part_of[i][x]));
    config.points.push_back(std::move(p));
    config.point_labels.push_back(item_labels.empty() ? "x" + std::to_string(x)
                                                      : item_labels[x]);
  }
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    for (std::size_t j = 0; j < partitions[i].parts.size(); ++j) {
      Box b;
      b.lo.resize(static_cast<std::size_t>(dim));
      b.hi.resize(static_cast<std::size_t>(dim));
      for (std::size_t axis = 0; axis < partitions.size(); ++axis) {
        if (axis == i) {
          b.lo[axis] = BigInt(static_cast<long long>(j) + 1);
          b.hi[axis] = b.lo[axis];
        } else {
          b.lo[axis] = BigInt(1);
          b.hi[axis] = BigInt(static_cast<long long>(partitions[axis].parts.size()));
        }
      }
      config.boxes.push_back(std::move(b));
      config.box_labels.push_back(partitions[i].part_labels.empty()
                                      ? "P" + std::to_string(i + 1) + ":" +
                                            std::to_string(j + 1)
                                      : partitions[i].part_labels[j]);
    }
  }
  return config;
}

Config hyperplane_config(int k, int t, int m) {
  auto partitions = hyperplane_partitions(k, t, m);
  std::vector<std::string> labels;
  for (const auto& tuple : grid_tuples(m, k)) labels.push_back(tuple_label(tuple));
  Config config = partitions_to_boxes(partitions, labels);
  Claims claims;
  claims.construction = "hyperplane";
  claims.params = {{"k", k}, {"t", t}, {"m", m}};
  claims.disjunct = t;
  config.claims = std::move(claims);
  return config;
}

namespace {

// General position, boxes shrunk to the minimal combinatorially equivalent
// ones, every coordinate an integer in [1, point count]. Boxes containing
// no point collapse to the all-zero degenerate box.
Config canonicalize_for_long_rect(const Config& input) {
  Config general = to_general_position(input);
  const std::size_t d = static_cast<std::size_t>(general.dim);
  const std::size_t m = general.points.size();

  Config out;
  out.dim = general.dim;
  out.point_labels = general.point_labels;
  out.box_labels = general.box_labels;
  out.claims = general.claims;
  out.points.resize(m);
  for (Point& p : out.points) p.coords.resize(d);

  // Per-axis rank of each point coordinate, 1-based.
  for (std::size_t axis = 0; axis < d; ++axis) {
    std::vector<BigInt> values;
    values.reserve(m);
    for (const Point& p : general.points) values.push_back(p.coords[axis]);
    std::sort(values.begin(), values.end());
    std::unordered_map<BigInt, long long> rank_of;
    for (std::size_t r = 0; r < values.size(); ++r)
      rank_of.emplace(values[r], static_cast<long long>(r) + 1);
    for (std::size_t i = 0; i < m; ++i)
      out.points[i].coords[axis] = BigInt(rank_of.at(general.points[i].coords[axis]));
  }

  for (const Box& box : general.boxes) {
    Box shrunk;
    shrunk.lo.assign(d, BigInt(0));
    shrunk.hi.assign(d, BigInt(0));
    bool first = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (!contains(box, general.points[i])) continue;
      if (first) {
        shrunk.lo = out.points[i].coords;
        shrunk.hi = out.points[i].coords;
        first = false;
      } else {
        for (std::size_t axis = 0; axis < d; ++axis) {
          if (out.points[i].coords[axis] < shrunk.lo[axis])
            shrunk.lo[axis] = out.points[i].coords[axis];
          if (shrunk.hi[axis] < out.points[i].coords[axis])
            shrunk.hi[axis] = out.points[i].coords[axis];
        }
      }
    }
    out.boxes.push_back(std::move(shrunk));
  }
  return out;
}

} // namespace

Config long_rect_step(const Config& input, int k) {
  if (k < 1) throw std::invalid_argument("long_rect_step: k must be >= 1");
  if (input.dim < 2) throw std::invalid_argument("long_rect_step: need dimension >= 2");
  if (!input.claims || !input.claims->disjunct)
    throw std::invalid_argument("long_rect_step: input lacks a disjunct claim");
  const int t = *input.claims->disjunct;

  Config base = canonicalize_for_long_rect(input);
  const std::size_t d = static_cast<std::size_t>(base.dim);
  const long long m = static_cast<long long>(base.points.size());

  Config out;
  out.dim = base.dim;
  for (int copy = 1; copy <= k; ++copy) {
    const BigInt shift(static_cast<long long>(copy - 1) * m);
    for (std::size_t i = 0; i < base.points.size(); ++i) {
      Point p = base.points[i];
      p.coords[0] += shift;
      out.points.push_back(std::move(p));
      out.point_labels.push_back(base.point_labels[i] + "#" + std::to_string(copy));
    }
  }
  for (int copy = 1; copy <= k; ++copy) {
    const BigInt shift(static_cast<long long>(copy - 1) * m);
    for (std::size_t j = 0; j < base.boxes.size(); ++j) {
      Box b = base.boxes[j];
      b.lo[0] += shift;
      b.hi[0] += shift;
      out.boxes.push_back(std::move(b));
      out.box_labels.push_back(base.box_labels[j] + "#" + std::to_string(copy));
    }
  }
  for (std::size_t i = 0; i < base.points.size(); ++i) {
    Box b;
    b.lo.resize(d);
    b.hi.resize(d);
    b.lo[0] = BigInt(1);
    b.hi[0] = BigInt(static_cast<long long>(k) * m);
    for (std::size_t axis = 1; axis < d; ++axis) {
      b.lo[axis] = base.points[i].coords[axis];
      b.hi[axis] = base.points[i].coords[axis];
    }
    out.boxes.push_back(std::move(b));
    out.box_labels.push_back("R[" + base.point_labels[i] + "]");
  }

  Claims claims;
  claims.construction = "long_rect";
  claims.params = {{"k", k}};
  claims.disjunct = t + 1;
  out.claims = std::move(claims);
  return out;
}

Config long_rect_tower(int d, int t, int m, const std::vector<int>& step_copies) {
  if (d < 2) throw std::invalid_argument("long_rect_tower: d must be >= 2");
  if (t < d - 1) throw std::invalid_argument("long_rect_tower: t must be >= d-1");
  Config config = hyperplane_config(2, d - 1, m);
  const int steps = t - (d - 1);
  for (int s = 0; s < steps; ++s) {
    int k;
    if (s < static_cast<int>(step_copies.size())) {
      k = step_copies[s];
    } else {
      // The exponent-optimal choice: with points ~ boxes^c the next copy
      // count is boxes^(c-1) = points/boxes.
      const std::size_t points = config.points.size();
      const std::size_t boxes = config.boxes.size();
      k = static_cast<int>((points + boxes - 1) / boxes);
      if (k < 1) k = 1;
    }
    config = long_rect_step(config, k);
  }
  return config;
}

Config subspace_config(int k, int d, int m) {
  if (k < 1 || k > d - 1)
    throw std::invalid_argument("subspace_config: need 1 <= k <= d-1");
  if (m < 2) throw std::invalid_argument("subspace_config: m must be >= 2");
  Config config = flat_config(k, d, m);
  Claims claims;
  claims.construction = "subspace";
  claims.params = {{"k", k}, {"d", d}, {"m", m}};
  claims.disjunct = d - k;
  config.claims = std::move(claims);
  return config;
}

Config project_subspace_config(int k, int d, int m) {
  if (k > d - 2)
    throw std::invalid_argument("project_subspace_config: need k <= d-2");
  Config source = subspace_config(k, d, m);

  const BigInt scale(m + 1);
  auto project_point = [&](const Point& p) {
    Point out;
    out.coords.reserve(static_cast<std::size_t>(d) - 1);
    for (int i = 0; i < d - 1; ++i)
      out.coords.push_back(p.coords[i] * scale + p.coords[d - 1]);
    return out;
  };

  Config config;
  config.dim = d - 1;
  config.point_labels = source.point_labels;
  config.box_labels = source.box_labels;
  config.claims = source.claims;
  if (config.claims) config.claims->construction = "subspace_projected";
  for (const Point& p : source.points) config.points.push_back(project_point(p));

  for (const Box& flat : source.boxes) {
    Box rect;
    bool first = true;
    for (const Point& p : source.points) {
      if (!contains(flat, p)) continue;
      Point image = project_point(p);
      if (first) {
        rect.lo = image.coords;
        rect.hi = image.coords;
        first = false;
      } else {
        for (int axis = 0; axis < d - 1; ++axis) {
          if (image.coords[axis] < rect.lo[axis]) rect.lo[axis] = image.coords[axis];
          if (rect.hi[axis] < image.coords[axis]) rect.hi[axis] = image.coords[axis];
        }
      }
    }
    config.boxes.push_back(std::move(rect));
  }

  SetSystem original = induce(source);
  SetSystem projected = induce(config);
  if (!(original == projected))
    throw SelfCheckError("project_subspace_config: projection is not equivalent");
  return config;
}

Config single_defective_grid(int n) {
  if (n < 1) throw std::invalid_argument("single_defective_grid: n must be >= 1");
  Config config = flat_config(1, 2, n);
  Claims claims;
  claims.construction = "single_defective_grid";
  claims.params = {{"n", n}};
  claims.disjunct = 1;
  config.claims = std::move(claims);
  return config;
}

Config disjoint_boxes(int m, int d) {
  if (m < 1) throw std::invalid_argument("disjoint_boxes: m must be >= 1");
  if (d < 1) throw std::invalid_argument("disjoint_boxes: d must be >= 1");
  Config config;
  config.dim = d;
  for (int i = 1; i <= m; ++i) {
    Point p;
    Box b;
    for (int axis = 0; axis < d; ++axis) {
      p.coords.push_back(BigInt(3 * i - 1));
      b.lo.push_back(BigInt(3 * i - 2));
      b.hi.push_back(BigInt(3 * i));
    }
    config.points.push_back(std::move(p));
    config.point_labels.push_back("p" + std::to_string(i));
    config.boxes.push_back(std::move(b));
    config.box_labels.push_back("b" + std::to_string(i));
  }
  Claims claims;
  claims.construction = "disjoint_boxes";
  claims.params = {{"m", m}, {"d", d}};
  if (m >= 2) claims.disjunct = m - 1;
  config.claims = std::move(claims);
  return config;
}

std::vector<ClaimCheck> verify_claims(const Config& config, const VerifyOptions& options) {
  std::vector<ClaimCheck> checks;
  if (!config.claims) return checks;
  const Claims& claims = *config.claims;
  SetSystem sys = induce(config);

  if (claims.disjunct) {
    auto r = verify_disjunct(sys, *claims.disjunct, options);
    checks.push_back({"disjunct=" + std::to_string(*claims.disjunct), r.ok});
  }
  if (claims.not_disjunct) {
    auto r = verify_disjunct(sys, *claims.not_disjunct, options);
    checks.push_back({"not_disjunct=" + std::to_string(*claims.not_disjunct), !r.ok});
  }
  if (claims.separable) {
    auto r = verify_separable(sys, *claims.separable, SepMode::exactly, options);
    checks.push_back({"separable=" + std::to_string(*claims.separable), r.ok});
  }
  if (claims.not_separable) {
    auto r = verify_separable(sys, *claims.not_separable, SepMode::exactly, options);
    checks.push_back({"not_separable=" + std::to_string(*claims.not_separable), !r.ok});
  }
  return checks;
}

} // namespace boxtest
