#include "boxtest/geometry.hpp"

#include <algorithm>
#include <unordered_set>

namespace boxtest {

void validate(const Config& config) {
  if (config.dim < 1) throw std::invalid_argument("Config: dim must be >= 1");
  const std::size_t d = static_cast<std::size_t>(config.dim);
  for (const Point& p : config.points) {
    if (p.coords.size() != d) throw std::invalid_argument("Config: point dimension mismatch");
  }
  for (const Box& b : config.boxes) {
    if (b.lo.size() != d || b.hi.size() != d)
      throw std::invalid_argument("Config: box dimension mismatch");
    for (std::size_t i = 0; i < d; ++i) {
      if (b.hi[i] < b.lo[i]) throw std::invalid_argument("Config: box with hi < lo");
    }
  }
  if (!config.point_labels.empty() && config.point_labels.size() != config.points.size())
    throw std::invalid_argument("Config: point label count mismatch");
  if (!config.box_labels.empty() && config.box_labels.size() != config.boxes.size())
    throw std::invalid_argument("Config: box label count mismatch");
  std::unordered_set<std::string> seen;
  for (const std::string& label : config.point_labels) {
    if (!seen.insert(label).second)
      throw std::invalid_argument("Config: duplicate point label: " + label);
  }
  seen.clear();
  for (const std::string& label : config.box_labels) {
    if (!seen.insert(label).second)
      throw std::invalid_argument("Config: duplicate box label: " + label);
  }
}

bool contains(const Box& box, const Point& point) {
  if (box.lo.size() != point.coords.size())
    throw std::invalid_argument("contains: dimension mismatch");
  for (std::size_t i = 0; i < point.coords.size(); ++i) {
    if (point.coords[i] < box.lo[i] || box.hi[i] < point.coords[i]) return false;
  }
  return true;
}

SetSystem induce(const Config& config) {
  validate(config);
  SetSystem sys(config.points.size(), config.boxes.size());
  for (std::size_t i = 0; i < config.points.size(); ++i) {
    for (std::size_t j = 0; j < config.boxes.size(); ++j) {
      if (contains(config.boxes[j], config.points[i])) sys.set_incident(i, j);
    }
  }
  sys.item_labels = config.point_labels;
  sys.test_labels = config.box_labels;
  return sys;
}

bool is_general_position(const Config& config) {
  validate(config);
  const std::size_t d = static_cast<std::size_t>(config.dim);
  for (std::size_t axis = 0; axis < d; ++axis) {
    std::vector<BigInt> values;
    values.reserve(config.points.size() + 2 * config.boxes.size());
    for (const Point& p : config.points) values.push_back(p.coords[axis]);
    for (const Box& b : config.boxes) {
      values.push_back(b.lo[axis]);
      values.push_back(b.hi[axis]);
    }
    std::sort(values.begin(), values.end());
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i - 1] == values[i]) return false;
    }
  }
  return true;
}

Config to_general_position(const Config& config) {
  validate(config);
  const std::size_t d = static_cast<std::size_t>(config.dim);
  const std::size_t num_points = config.points.size();
  const std::size_t num_boxes = config.boxes.size();
  const long long entities = static_cast<long long>(num_points + num_boxes);

  // Scale so original strict inequalities survive any pair of offsets, then
  // give point j offset j+1 and box j the larger fattening P+j+1. Residues
  // of points, box-lo and box-hi facets land in disjoint bands, so all
  // coordinates per axis come out distinct.
  const BigInt scale(4 * entities + 4);

  Config out;
  out.dim = config.dim;
  out.point_labels = config.point_labels;
  out.box_labels = config.box_labels;
  out.claims = config.claims;

  out.points.reserve(num_points);
  for (std::size_t j = 0; j < num_points; ++j) {
    Point p;
    p.coords.reserve(d);
    const BigInt offset(static_cast<long long>(j) + 1);
    for (std::size_t axis = 0; axis < d; ++axis) {
      p.coords.push_back(config.points[j].coords[axis] * scale + offset);
    }
    out.points.push_back(std::move(p));
  }

  out.boxes.reserve(num_boxes);
  for (std::size_t j = 0; j < num_boxes; ++j) {
    Box b;
    b.lo.reserve(d);
    b.hi.reserve(d);
    const BigInt fatten(static_cast<long long>(num_points + j) + 1);
    for (std::size_t axis = 0; axis < d; ++axis) {
      b.lo.push_back(config.boxes[j].lo[axis] * scale - fatten);
      b.hi.push_back(config.boxes[j].hi[axis] * scale + fatten);
    }
    out.boxes.push_back(std::move(b));
  }
  return out;
}

Config compress_to_grid(const Config& config) {
  const std::size_t n = config.boxes.size();
  if (n == 0) {
    if (config.points.size() > 1)
      throw std::invalid_argument(
          "compress_to_grid: no boxes; grid capacity 1 exceeded");
    Config out = config;
    for (Point& p : out.points) {
      for (BigInt& c : p.coords) c = BigInt(1);
    }
    return out;
  }

  Config general = to_general_position(config);
  const std::size_t d = static_cast<std::size_t>(general.dim);

  Config out;
  out.dim = general.dim;
  out.point_labels = general.point_labels;
  out.box_labels = general.box_labels;
  out.claims = general.claims;
  out.points.resize(general.points.size());
  out.boxes.resize(general.boxes.size());
  for (Point& p : out.points) p.coords.resize(d);
  for (Box& b : out.boxes) {
    b.lo.resize(d);
    b.hi.resize(d);
  }

  for (std::size_t axis = 0; axis < d; ++axis) {
    // The 2n facet values are distinct after the general-position pass.
    // Facet j (1-based in sorted order) gets slot 2j, the strip between
    // facets j and j+1 gets slot 2j+1, and everything outside all strips
    // gets slot 1. Points aligned within a strip share its slot.
    std::vector<BigInt> facets;
    facets.reserve(2 * n);
    for (const Box& b : general.boxes) {
      facets.push_back(b.lo[axis]);
      facets.push_back(b.hi[axis]);
    }
    std::sort(facets.begin(), facets.end());

    auto slot_of_point = [&](const BigInt& value) -> long long {
      auto it = std::upper_bound(facets.begin(), facets.end(), value);
      std::size_t below = static_cast<std::size_t>(it - facets.begin());
      if (below == 0 || below == facets.size()) return 1; // outside all strips
      return 2 * static_cast<long long>(below) + 1;
    };
    auto slot_of_facet = [&](const BigInt& value) -> long long {
      auto it = std::lower_bound(facets.begin(), facets.end(), value);
      return 2 * static_cast<long long>(it - facets.begin() + 1);
    };

    for (std::size_t i = 0; i < general.points.size(); ++i) {
      out.points[i].coords[axis] = BigInt(slot_of_point(general.points[i].coords[axis]));
    }
    for (std::size_t i = 0; i < general.boxes.size(); ++i) {
      out.boxes[i].lo[axis] = BigInt(slot_of_facet(general.boxes[i].lo[axis]));
      out.boxes[i].hi[axis] = BigInt(slot_of_facet(general.boxes[i].hi[axis]));
    }
  }
  return out;
}

} // namespace boxtest
