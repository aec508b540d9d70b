#include "boxtest/patterns.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>

namespace boxtest {

namespace {

PointList normalized(const PointList& points, int dim) {
  PointList out;
  out.reserve(points.size());
  for (const GridPoint& p : points) {
    if (p.size() != static_cast<std::size_t>(dim))
      throw std::invalid_argument("pattern: point dimension mismatch");
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_dim(PatternKind kind, int dim) {
  if (kind != PatternKind::star && dim != 2)
    throw std::invalid_argument("pattern: " + to_string(kind) + " requires dimension 2");
  if (dim < 1) throw std::invalid_argument("pattern: dimension must be >= 1");
}

// Column/row indexes of a planar point set.
struct PlanarIndex {
  std::map<long long, std::vector<long long>> cols; // x -> sorted ys
  std::map<long long, std::vector<long long>> rows; // y -> sorted xs

  explicit PlanarIndex(const PointList& points) {
    for (const GridPoint& p : points) {
      cols[p[0]].push_back(p[1]);
      rows[p[1]].push_back(p[0]);
    }
    for (auto& [x, ys] : cols) std::sort(ys.begin(), ys.end());
    for (auto& [y, xs] : rows) std::sort(xs.begin(), xs.end());
  }
};

std::vector<long long> sorted_intersection(const std::vector<long long>& a,
                                           const std::vector<long long>& b) {
  std::vector<long long> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Lines through a star: the key is the point with one axis dropped.
std::map<std::vector<long long>, std::vector<long long>> axis_lines(const PointList& points,
                                                                    int axis) {
  std::map<std::vector<long long>, std::vector<long long>> lines;
  for (const GridPoint& p : points) {
    std::vector<long long> key;
    key.reserve(p.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
      if (static_cast<int>(i) != axis) key.push_back(p[i]);
    lines[std::move(key)].push_back(p[axis]);
  }
  for (auto& [key, values] : lines) std::sort(values.begin(), values.end());
  return lines;
}

std::optional<PatternHit> find_rectangle(const PointList& points) {
  PlanarIndex index(points);
  for (auto it1 = index.cols.begin(); it1 != index.cols.end(); ++it1) {
    // For this left column, pick the candidate minimizing (y1, y2, x2).
    std::optional<std::array<long long, 3>> best;
    for (auto it2 = std::next(it1); it2 != index.cols.end(); ++it2) {
      auto shared = sorted_intersection(it1->second, it2->second);
      if (shared.size() < 2) continue;
      std::array<long long, 3> candidate{shared[0], shared[1], it2->first};
      if (!best || candidate < *best) best = candidate;
    }
    if (best) {
      long long x1 = it1->first, y1 = (*best)[0], y2 = (*best)[1], x2 = (*best)[2];
      return PatternHit{{{x1, y1}, {x1, y2}, {x2, y1}, {x2, y2}}};
    }
  }
  return std::nullopt;
}

std::optional<PatternHit> find_z_shape(const PointList& points) {
  PlanarIndex index(points);
  for (const GridPoint& w : points) {
    const auto& row_w = index.rows.at(w[1]);
    for (long long mid_x : row_w) {
      if (mid_x <= w[0]) continue;
      const auto& col_mid = index.cols.at(mid_x);
      for (long long upper_y : col_mid) {
        if (upper_y <= w[1]) continue;
        const auto& row_u = index.rows.at(upper_y);
        auto it = std::upper_bound(row_u.begin(), row_u.end(), mid_x);
        if (it != row_u.end()) {
          return PatternHit{{w, {mid_x, w[1]}, {mid_x, upper_y}, {*it, upper_y}}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<PatternHit> find_star(const PointList& points, int dim) {
  std::vector<std::map<std::vector<long long>, std::vector<long long>>> lines;
  lines.reserve(static_cast<std::size_t>(dim));
  for (int axis = 0; axis < dim; ++axis) lines.push_back(axis_lines(points, axis));

  for (const GridPoint& center : points) {
    PatternHit hit;
    hit.points.push_back(center);
    bool complete = true;
    for (int axis = 0; axis < dim && complete; ++axis) {
      std::vector<long long> key;
      for (std::size_t i = 0; i < center.size(); ++i)
        if (static_cast<int>(i) != axis) key.push_back(center[i]);
      const auto& values = lines[static_cast<std::size_t>(axis)].at(key);
      complete = false;
      for (long long v : values) {
        if (v != center[axis]) {
          GridPoint tip = center;
          tip[static_cast<std::size_t>(axis)] = v;
          hit.points.push_back(std::move(tip));
          complete = true;
          break;
        }
      }
    }
    if (complete) return hit;
  }
  return std::nullopt;
}

bool has_interior_stabber(const PointList& stabbers, const GridPoint& lo,
                          const GridPoint& hi) {
  for (const GridPoint& s : stabbers) {
    bool inside = true;
    for (std::size_t i = 0; i < lo.size() && inside; ++i) {
      inside = lo[i] < s[i] && s[i] < hi[i];
    }
    if (inside) return true;
  }
  return false;
}

void bounding_box(const PointList& points, GridPoint& lo, GridPoint& hi) {
  lo = points.front();
  hi = points.front();
  for (const GridPoint& p : points) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
}

long long isqrt_ceil(long long v) {
  if (v <= 0) return 0;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r * r >= v) --r;
  while (r * r < v) ++r;
  return r;
}

long long checked_mul_ll(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::invalid_argument("pattern_weight: overflow");
  return out;
}

} // namespace

std::string to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::induced_rectangle: return "induced_rectangle";
    case PatternKind::z_shape: return "z_shape";
    case PatternKind::star: return "star";
  }
  return "?";
}

PatternKind pattern_kind_from_string(const std::string& name) {
  if (name == "induced_rectangle" || name == "zar" || name == "rect")
    return PatternKind::induced_rectangle;
  if (name == "z_shape" || name == "zshape") return PatternKind::z_shape;
  if (name == "star") return PatternKind::star;
  throw std::invalid_argument("unknown pattern kind: " + name);
}

namespace {

PointList mirror_x(const PointList& points) {
  PointList out = points;
  for (GridPoint& p : out) p[0] = -p[0];
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::optional<PatternHit> find_pattern(const PointList& points, PatternKind kind,
                                       int dim, const PatternOptions& options) {
  require_dim(kind, dim);
  PointList p = normalized(points, dim);
  switch (kind) {
    case PatternKind::induced_rectangle: return find_rectangle(p);
    case PatternKind::z_shape: {
      auto hit = find_z_shape(p);
      if (hit || !options.mirrored_z) return hit;
      auto flipped = find_z_shape(mirror_x(p));
      if (!flipped) return std::nullopt;
      for (GridPoint& q : flipped->points) q[0] = -q[0];
      return flipped;
    }
    case PatternKind::star: return find_star(p, dim);
  }
  return std::nullopt;
}

StabResult stabs(const PointList& stabbers, const PointList& points, PatternKind kind,
                 int dim, const PatternOptions& options) {
  require_dim(kind, dim);
  PointList p = normalized(points, dim);
  PointList v = normalized(stabbers, dim);

  auto check = [&](const PatternHit& hit) -> bool {
    GridPoint lo, hi;
    bounding_box(hit.points, lo, hi);
    return has_interior_stabber(v, lo, hi);
  };

  if (kind == PatternKind::induced_rectangle) {
    PlanarIndex index(p);
    for (auto it1 = index.cols.begin(); it1 != index.cols.end(); ++it1) {
      std::vector<std::array<long long, 3>> candidates;
      for (auto it2 = std::next(it1); it2 != index.cols.end(); ++it2) {
        auto shared = sorted_intersection(it1->second, it2->second);
        for (std::size_t a = 0; a < shared.size(); ++a)
          for (std::size_t b = a + 1; b < shared.size(); ++b)
            candidates.push_back({shared[a], shared[b], it2->first});
      }
      std::sort(candidates.begin(), candidates.end());
      for (const auto& c : candidates) {
        PatternHit hit{{{it1->first, c[0]}, {it1->first, c[1]}, {c[2], c[0]}, {c[2], c[1]}}};
        if (!check(hit)) return StabResult{false, hit};
      }
    }
    return StabResult{true, std::nullopt};
  }

  if (kind == PatternKind::z_shape) {
    PlanarIndex index(p);
    for (const GridPoint& w : p) {
      for (long long mid_x : index.rows.at(w[1])) {
        if (mid_x <= w[0]) continue;
        for (long long upper_y : index.cols.at(mid_x)) {
          if (upper_y <= w[1]) continue;
          for (long long zx : index.rows.at(upper_y)) {
            if (zx <= mid_x) continue;
            PatternHit hit{{w, {mid_x, w[1]}, {mid_x, upper_y}, {zx, upper_y}}};
            if (!check(hit)) return StabResult{false, hit};
          }
        }
      }
    }
    if (options.mirrored_z) {
      // Stabbing is mirror-invariant, so scan the reflected plane.
      StabResult mirrored = stabs(mirror_x(v), mirror_x(p), kind, dim, {});
      if (!mirrored.ok) {
        for (GridPoint& q : mirrored.unstabbed->points) q[0] = -q[0];
        return mirrored;
      }
    }
    return StabResult{true, std::nullopt};
  }

  // star: every center with every combination of tips.
  std::vector<std::map<std::vector<long long>, std::vector<long long>>> lines;
  for (int axis = 0; axis < dim; ++axis) lines.push_back(axis_lines(p, axis));
  for (const GridPoint& center : p) {
    std::vector<std::vector<long long>> tip_choices(static_cast<std::size_t>(dim));
    bool feasible = true;
    for (int axis = 0; axis < dim && feasible; ++axis) {
      std::vector<long long> key;
      for (std::size_t i = 0; i < center.size(); ++i)
        if (static_cast<int>(i) != axis) key.push_back(center[i]);
      for (long long v2 : lines[static_cast<std::size_t>(axis)].at(key))
        if (v2 != center[axis]) tip_choices[static_cast<std::size_t>(axis)].push_back(v2);
      feasible = !tip_choices[static_cast<std::size_t>(axis)].empty();
    }
    if (!feasible) continue;
    std::vector<std::size_t> pick(static_cast<std::size_t>(dim), 0);
    for (;;) {
      PatternHit hit;
      hit.points.push_back(center);
      for (int axis = 0; axis < dim; ++axis) {
        GridPoint tip = center;
        tip[static_cast<std::size_t>(axis)] =
            tip_choices[static_cast<std::size_t>(axis)][pick[static_cast<std::size_t>(axis)]];
        hit.points.push_back(std::move(tip));
      }
      if (!check(hit)) return StabResult{false, hit};
      int axis = dim - 1;
      while (axis >= 0 &&
             ++pick[static_cast<std::size_t>(axis)] ==
                 tip_choices[static_cast<std::size_t>(axis)].size()) {
        pick[static_cast<std::size_t>(axis)] = 0;
        --axis;
      }
      if (axis < 0) break;
    }
  }
  return StabResult{true, std::nullopt};
}

long long pattern_weight(const std::vector<long long>& sides, PatternKind kind) {
  for (long long s : sides) {
    if (s < 1) throw std::invalid_argument("pattern_weight: sides must be >= 1");
  }
  switch (kind) {
    case PatternKind::induced_rectangle: {
      if (sides.size() != 2) throw std::invalid_argument("pattern_weight: need 2 sides");
      long long p = std::max(sides[0], sides[1]);
      long long q = std::min(sides[0], sides[1]);
      return checked_mul_ll(isqrt_ceil(p), q) + p;
    }
    case PatternKind::z_shape: {
      if (sides.size() != 2) throw std::invalid_argument("pattern_weight: need 2 sides");
      return kZShapeSlack * (sides[0] + sides[1]);
    }
    case PatternKind::star: {
      long long total = 0;
      for (std::size_t i = 0; i < sides.size(); ++i) {
        long long product = 1;
        for (std::size_t j = 0; j < sides.size(); ++j)
          if (j != i) product = checked_mul_ll(product, sides[j]);
        total += product;
      }
      return total;
    }
  }
  throw std::invalid_argument("pattern_weight: unknown kind");
}

namespace {

// Smallest k with k^power >= n.
int pad_to_power(int n, int power) {
  int k = 1;
  for (;;) {
    long long value = 1;
    for (int i = 0; i < power; ++i) value *= k;
    if (value >= n) return k;
    ++k;
  }
}

} // namespace

Covering cover(int n, int dim, const PointList& avoid, PatternKind scheme,
               const CoverOptions& options) {
  if (n < 1) throw std::invalid_argument("cover: n must be >= 1");
  if (scheme != PatternKind::star && dim != 2)
    throw std::invalid_argument("cover: " + to_string(scheme) + " requires dimension 2");
  if (scheme == PatternKind::star && dim < 1)
    throw std::invalid_argument("cover: dimension must be >= 1");
  if (options.split_axis < 0 || options.split_axis >= dim)
    throw std::invalid_argument("cover: split axis out of range");

  Covering covering;
  covering.dim = dim;
  covering.scheme = scheme;

  if (scheme == PatternKind::induced_rectangle) {
    const int k = pad_to_power(n, 3);
    covering.grid_side = k * k * k;
    const long long kk = static_cast<long long>(k) * k;
    for (long long i = 1; i <= k; ++i) {
      for (long long j = 1; j <= kk; ++j) {
        covering.boxes.push_back(IntBox{{(i - 1) * kk + 1, (j - 1) * k + 1},
                                        {i * kk, j * k}});
      }
    }
  } else if (scheme == PatternKind::z_shape) {
    const int k = pad_to_power(n, 2);
    covering.grid_side = k * k;
    for (long long i = 1; i <= k; ++i) {
      for (long long j = 1; j <= k; ++j) {
        covering.boxes.push_back(IntBox{{(i - 1) * k + 1, (j - 1) * k + 1},
                                        {i * k, j * k}});
      }
    }
  } else {
    const int k = pad_to_power(n, dim);
    long long side = 1;
    for (int i = 0; i < dim; ++i) side *= k;
    covering.grid_side = static_cast<int>(side);
    const long long cube = side / k; // n^(1-1/d)
    std::vector<long long> idx(static_cast<std::size_t>(dim), 1);
    for (;;) {
      IntBox box;
      for (int axis = 0; axis < dim; ++axis) {
        box.lo.push_back((idx[static_cast<std::size_t>(axis)] - 1) * cube + 1);
        box.hi.push_back(idx[static_cast<std::size_t>(axis)] * cube);
      }
      covering.boxes.push_back(std::move(box));
      int axis = dim - 1;
      while (axis >= 0 && idx[static_cast<std::size_t>(axis)] == k) {
        idx[static_cast<std::size_t>(axis)] = 1;
        --axis;
      }
      if (axis < 0) break;
      ++idx[static_cast<std::size_t>(axis)];
    }
  }

  PointList v = normalized(avoid, dim);
  for (const GridPoint& p : v) {
    for (long long c : p) {
      if (c < 1 || c > covering.grid_side)
        throw std::invalid_argument("cover: avoid point outside the grid");
    }
  }
  if (scheme != PatternKind::star &&
      v.size() > static_cast<std::size_t>(covering.grid_side))
    throw std::invalid_argument("cover: too many avoid points for the scheme");

  // One split per interior point: box interiors are pairwise disjoint, so
  // each point splits at most one box, and afterwards it lies on the shared
  // facet of the two halves.
  const std::size_t axis = static_cast<std::size_t>(options.split_axis);
  for (const GridPoint& p : v) {
    for (std::size_t b = 0; b < covering.boxes.size(); ++b) {
      IntBox& box = covering.boxes[b];
      bool interior = true;
      for (std::size_t i = 0; i < box.lo.size() && interior; ++i)
        interior = box.lo[i] < p[i] && p[i] < box.hi[i];
      if (!interior) continue;
      IntBox right = box;
      right.lo[axis] = p[axis];
      box.hi[axis] = p[axis];
      covering.boxes.push_back(std::move(right));
      break;
    }
  }
  return covering;
}

CoveringCheck covering_check(const Covering& covering, const PointList& avoid) {
  CoveringCheck result;
  result.report.scheme = covering.scheme;
  const int dim = covering.dim;
  PointList v = normalized(avoid, dim);

  for (const IntBox& box : covering.boxes) {
    if (box.lo.size() != static_cast<std::size_t>(dim) ||
        box.hi.size() != static_cast<std::size_t>(dim))
      throw std::invalid_argument("covering_check: box dimension mismatch");
    for (int i = 0; i < dim; ++i) {
      if (box.hi[static_cast<std::size_t>(i)] < box.lo[static_cast<std::size_t>(i)])
        throw std::invalid_argument("covering_check: box with hi < lo");
    }
  }

  // Validity: no avoid point strictly inside any box.
  for (std::size_t b = 0; b < covering.boxes.size(); ++b) {
    const IntBox& box = covering.boxes[b];
    for (const GridPoint& p : v) {
      bool interior = true;
      for (int i = 0; i < dim && interior; ++i)
        interior = box.lo[static_cast<std::size_t>(i)] < p[static_cast<std::size_t>(i)] &&
                   p[static_cast<std::size_t>(i)] < box.hi[static_cast<std::size_t>(i)];
      if (interior) {
        result.ok = false;
        result.invalid_box = b;
        result.violating_point = p;
        return result;
      }
    }
  }

  // Coverage of every grid point of [1, grid_side]^dim.
  std::vector<long long> point(static_cast<std::size_t>(dim), 1);
  for (;;) {
    bool covered = false;
    for (const IntBox& box : covering.boxes) {
      bool inside = true;
      for (int i = 0; i < dim && inside; ++i)
        inside = box.lo[static_cast<std::size_t>(i)] <= point[static_cast<std::size_t>(i)] &&
                 point[static_cast<std::size_t>(i)] <= box.hi[static_cast<std::size_t>(i)];
      if (inside) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      result.ok = false;
      result.uncovered = point;
      return result;
    }
    int axis = dim - 1;
    while (axis >= 0 && point[static_cast<std::size_t>(axis)] == covering.grid_side) {
      point[static_cast<std::size_t>(axis)] = 1;
      --axis;
    }
    if (axis < 0) break;
    ++point[static_cast<std::size_t>(axis)];
  }

  result.ok = true;
  for (std::size_t b = 0; b < covering.boxes.size(); ++b) {
    const IntBox& box = covering.boxes[b];
    std::vector<long long> sides;
    for (int i = 0; i < dim; ++i)
      sides.push_back(box.hi[static_cast<std::size_t>(i)] -
                      box.lo[static_cast<std::size_t>(i)] + 1);
    long long w = pattern_weight(sides, covering.scheme);
    result.report.boxes.push_back(BoxWeight{b, std::move(sides), w});
    result.report.total += w;
  }
  return result;
}

PointList hard_instance(int k) {
  if (k < 1) throw std::invalid_argument("hard_instance: k must be >= 1");
  PointList points;
  const long long cell = static_cast<long long>(k) * k;
  for (long long i = 0; i < k; ++i) {
    for (long long j = 0; j < k; ++j) {
      for (long long s = 0; s < k; ++s) {
        points.push_back({i * cell + s * k + 1, j * cell + s * k + 1});
      }
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

namespace {

long long rectangle_free_max(int p, int q) {
  if (p < 2 || q < 2) return static_cast<long long>(p) * q;
  // DP over rows with a mask of used column pairs; a rectangle appears
  // exactly when some column pair is used by two rows.
  if (q > p) std::swap(p, q);
  const int pairs = q * (q - 1) / 2;
  if (pairs > 22) throw BudgetError("brute_pattern_free_max: state space too large");
  std::vector<int> pair_bit(static_cast<std::size_t>(q) * q, -1);
  int next = 0;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b) pair_bit[static_cast<std::size_t>(a) * q + b] = next++;

  const std::uint32_t subsets = 1u << q;
  std::vector<std::uint32_t> pairs_of(subsets, 0);
  for (std::uint32_t s = 0; s < subsets; ++s) {
    std::uint32_t mask = 0;
    for (int a = 0; a < q; ++a) {
      if (!(s >> a & 1)) continue;
      for (int b = a + 1; b < q; ++b) {
        if (s >> b & 1) mask |= 1u << pair_bit[static_cast<std::size_t>(a) * q + b];
      }
    }
    pairs_of[s] = mask;
  }

  std::vector<int> dp(1u << pairs, -1);
  dp[0] = 0;
  for (int row = 0; row < p; ++row) {
    std::vector<int> nxt = dp;
    for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
      if (dp[mask] < 0) continue;
      for (std::uint32_t s = 1; s < subsets; ++s) {
        if (pairs_of[s] & mask) continue;
        std::uint32_t merged = mask | pairs_of[s];
        int value = dp[mask] + std::popcount(s);
        if (value > nxt[merged]) nxt[merged] = value;
      }
    }
    dp = std::move(nxt);
  }
  return *std::max_element(dp.begin(), dp.end());
}

long long z_free_max(int p, int q) {
  if (p < 3 || q < 2) return static_cast<long long>(p) * q;
  // DP over columns. State: rows seen in strictly earlier columns, and rows
  // whose occupation in a later column would complete a Z.
  if (q > 11) throw BudgetError("brute_pattern_free_max: state space too large");
  const std::uint32_t rows = 1u << q;
  auto key = [rows](std::uint32_t seen, std::uint32_t threat) {
    return static_cast<std::size_t>(seen) * rows + threat;
  };
  std::vector<int> dp(static_cast<std::size_t>(rows) * rows, -1);
  dp[key(0, 0)] = 0;
  for (int col = 0; col < p; ++col) {
    std::vector<int> nxt(dp.size(), -1);
    for (std::uint32_t seen = 0; seen < rows; ++seen) {
      for (std::uint32_t threat = 0; threat < rows; ++threat) {
        int cur = dp[key(seen, threat)];
        if (cur < 0) continue;
        for (std::uint32_t s = 0; s < rows; ++s) {
          if (s & threat) continue; // would complete a Z
          std::uint32_t new_threat = threat;
          if (s) {
            for (int b = 1; b < q; ++b) {
              if (!(s >> b & 1)) continue;
              std::uint32_t below = (1u << b) - 1;
              if (s & seen & below) new_threat |= 1u << b;
            }
          }
          std::size_t idx = key(seen | s, new_threat);
          int value = cur + std::popcount(s);
          if (value > nxt[idx]) nxt[idx] = value;
        }
      }
    }
    dp = std::move(nxt);
  }
  return *std::max_element(dp.begin(), dp.end());
}

struct StarSearch {
  int dim;
  std::vector<int> sides;
  std::vector<GridPoint> cells;                 // lex order
  std::vector<std::vector<std::size_t>> lines_of; // cell -> its d line ids
  std::vector<std::vector<std::size_t>> line_cells; // line -> cells on it
  std::vector<int> line_count;
  std::vector<char> chosen;
  int empty_lines = 0;
  long long best = 0;
  long long current = 0;

  bool creates_star(std::size_t cell) const {
    // Candidate centers: the new cell and every chosen cell sharing a line.
    if (is_center_after(cell, cell)) return true;
    for (std::size_t line : lines_of[cell]) {
      for (std::size_t other : line_cells[line]) {
        if (other != cell && chosen[other] && is_center_after(other, cell)) return true;
      }
    }
    return false;
  }

  // Would `center` be a star center once `added` is occupied?
  bool is_center_after(std::size_t center, std::size_t added) const {
    for (int axis = 0; axis < dim; ++axis) {
      std::size_t line = lines_of[center][static_cast<std::size_t>(axis)];
      int count = line_count[line];
      if (line == lines_of[added][static_cast<std::size_t>(axis)]) ++count;
      if (count < 2) return false;
    }
    return true;
  }

  void place(std::size_t cell, int delta) {
    for (std::size_t line : lines_of[cell]) {
      if (delta > 0 && line_count[line] == 0) --empty_lines;
      line_count[line] += delta;
      if (delta < 0 && line_count[line] == 0) ++empty_lines;
    }
    chosen[cell] = delta > 0;
    current += delta;
  }

  void dfs(std::size_t index) {
    if (current > best) best = current;
    if (index == cells.size()) return;
    long long remaining = static_cast<long long>(cells.size() - index);
    if (current + std::min<long long>(remaining, empty_lines) <= best) return;

    if (!creates_star(index)) {
      place(index, +1);
      dfs(index + 1);
      place(index, -1);
    }
    dfs(index + 1);
  }
};

long long star_free_max(const std::vector<int>& sides) {
  const int dim = static_cast<int>(sides.size());
  for (int s : sides) {
    if (s == 1) {
      // No point can have a partner along the width-1 axis, so no star fits.
      long long all = 1;
      for (int v : sides) all *= v;
      return all;
    }
  }

  StarSearch search;
  search.dim = dim;
  search.sides = sides;
  GridPoint cur(static_cast<std::size_t>(dim), 1);
  for (;;) {
    search.cells.push_back(cur);
    int axis = dim - 1;
    while (axis >= 0 && cur[static_cast<std::size_t>(axis)] == sides[static_cast<std::size_t>(axis)]) {
      cur[static_cast<std::size_t>(axis)] = 1;
      --axis;
    }
    if (axis < 0) break;
    ++cur[static_cast<std::size_t>(axis)];
  }

  std::map<std::pair<int, std::vector<long long>>, std::size_t> line_ids;
  search.lines_of.resize(search.cells.size());
  for (std::size_t c = 0; c < search.cells.size(); ++c) {
    for (int axis = 0; axis < dim; ++axis) {
      std::vector<long long> keyv;
      for (int i = 0; i < dim; ++i)
        if (i != axis) keyv.push_back(search.cells[c][static_cast<std::size_t>(i)]);
      auto [it, inserted] = line_ids.try_emplace({axis, std::move(keyv)}, line_ids.size());
      if (inserted) search.line_cells.emplace_back();
      search.lines_of[c].push_back(it->second);
      search.line_cells[it->second].push_back(c);
    }
  }
  search.line_count.assign(line_ids.size(), 0);
  search.chosen.assign(search.cells.size(), 0);
  search.empty_lines = static_cast<int>(line_ids.size());
  search.dfs(0);
  return search.best;
}

} // namespace

long long brute_pattern_free_max(const std::vector<int>& sides, PatternKind kind,
                                 std::uint64_t cell_budget) {
  for (int s : sides) {
    if (s < 1) throw std::invalid_argument("brute_pattern_free_max: sides must be >= 1");
  }
  if (kind != PatternKind::star && sides.size() != 2)
    throw std::invalid_argument("brute_pattern_free_max: planar kinds need 2 sides");
  if (kind == PatternKind::star && sides.empty())
    throw std::invalid_argument("brute_pattern_free_max: star needs >= 1 side");

  std::uint64_t cells = 1;
  for (int s : sides) cells *= static_cast<std::uint64_t>(s);
  std::uint64_t budget = cell_budget;
  if (budget == 0) {
    if (kind == PatternKind::star) {
      budget = 1;
      for (std::size_t i = 0; i < sides.size(); ++i) budget *= 4;
    } else {
      budget = 25;
    }
  }
  if (cells > budget)
    throw BudgetError("brute_pattern_free_max: grid exceeds cell budget");

  switch (kind) {
    case PatternKind::induced_rectangle: return rectangle_free_max(sides[0], sides[1]);
    case PatternKind::z_shape: return z_free_max(sides[0], sides[1]);
    case PatternKind::star: return star_free_max(sides);
  }
  throw std::invalid_argument("brute_pattern_free_max: unknown kind");
}

PointList config_points_as_grid(const Config& config) {
  PointList out;
  out.reserve(config.points.size());
  for (const Point& p : config.points) {
    GridPoint g;
    g.reserve(p.coords.size());
    for (const BigInt& c : p.coords) g.push_back(c.to_int64());
    out.push_back(std::move(g));
  }
  return out;
}

PointList box_corners(const Config& config) {
  PointList out;
  const std::size_t d = static_cast<std::size_t>(config.dim);
  for (const Box& box : config.boxes) {
    for (std::uint32_t pick = 0; pick < (1u << d); ++pick) {
      GridPoint corner(d);
      for (std::size_t i = 0; i < d; ++i)
        corner[i] = (pick >> i & 1) ? box.hi[i].to_int64() : box.lo[i].to_int64();
      out.push_back(std::move(corner));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace boxtest
