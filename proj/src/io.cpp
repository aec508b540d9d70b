#include "boxtest/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace boxtest {

namespace {

using json = nlohmann::ordered_json;

json coord_to_json(const BigInt& value) {
  if (value.fits_int64()) return value.to_int64();
  return value.to_string();
}

BigInt coord_from_json(const json& value) {
  if (value.is_number_integer()) return BigInt(value.get<long long>());
  if (value.is_string()) return BigInt::from_string(value.get<std::string>());
  throw ParseError("coordinate must be an integer or a decimal string");
}

json coords_to_json(const std::vector<BigInt>& coords) {
  json out = json::array();
  for (const BigInt& c : coords) out.push_back(coord_to_json(c));
  return out;
}

std::vector<BigInt> coords_from_json(const json& value) {
  if (!value.is_array()) throw ParseError("coordinate list must be an array");
  std::vector<BigInt> out;
  out.reserve(value.size());
  for (const json& c : value) out.push_back(coord_from_json(c));
  return out;
}

json claims_to_json(const Claims& claims) {
  json out;
  out["construction"] = claims.construction;
  json params = json::object();
  for (const auto& [name, value] : claims.params) params[name] = value;
  out["params"] = params;
  if (claims.disjunct) out["disjunct"] = *claims.disjunct;
  if (claims.not_disjunct) out["not_disjunct"] = *claims.not_disjunct;
  if (claims.separable) out["separable"] = *claims.separable;
  if (claims.not_separable) out["not_separable"] = *claims.not_separable;
  return out;
}

Claims claims_from_json(const json& value) {
  Claims claims;
  claims.construction = value.value("construction", std::string());
  if (value.contains("params")) {
    for (const auto& [name, v] : value.at("params").items())
      claims.params.emplace_back(name, v.get<long long>());
  }
  if (value.contains("disjunct")) claims.disjunct = value.at("disjunct").get<int>();
  if (value.contains("not_disjunct"))
    claims.not_disjunct = value.at("not_disjunct").get<int>();
  if (value.contains("separable")) claims.separable = value.at("separable").get<int>();
  if (value.contains("not_separable"))
    claims.not_separable = value.at("not_separable").get<int>();
  return claims;
}

json parse(const std::string& text) {
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) throw ParseError("invalid JSON");
  return value;
}

std::string dump(const json& value) { return value.dump(2) + "\n"; }

} // namespace

std::string config_to_json(const Config& config) {
  json out;
  out["dim"] = config.dim;
  json points = json::array();
  for (std::size_t i = 0; i < config.points.size(); ++i) {
    json p;
    p["label"] = i < config.point_labels.size() ? config.point_labels[i]
                                                : "p" + std::to_string(i);
    p["coords"] = coords_to_json(config.points[i].coords);
    points.push_back(std::move(p));
  }
  out["points"] = std::move(points);
  json boxes = json::array();
  for (std::size_t i = 0; i < config.boxes.size(); ++i) {
    json b;
    b["label"] = i < config.box_labels.size() ? config.box_labels[i]
                                              : "b" + std::to_string(i);
    b["lo"] = coords_to_json(config.boxes[i].lo);
    b["hi"] = coords_to_json(config.boxes[i].hi);
    boxes.push_back(std::move(b));
  }
  out["boxes"] = std::move(boxes);
  if (config.claims) out["claims"] = claims_to_json(*config.claims);
  return dump(out);
}

Config config_from_json(const std::string& text) {
  json value = parse(text);
  Config config;
  try {
    config.dim = value.at("dim").get<int>();
    for (const json& p : value.at("points")) {
      config.point_labels.push_back(p.at("label").get<std::string>());
      config.points.push_back(Point{coords_from_json(p.at("coords"))});
    }
    for (const json& b : value.at("boxes")) {
      config.box_labels.push_back(b.at("label").get<std::string>());
      config.boxes.push_back(
          Box{coords_from_json(b.at("lo")), coords_from_json(b.at("hi"))});
    }
    if (value.contains("claims")) config.claims = claims_from_json(value.at("claims"));
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  validate(config);
  return config;
}

std::string setsystem_to_json(const SetSystem& sys) {
  json out;
  out["m"] = sys.item_count();
  out["n"] = sys.test_count();
  json rows = json::array();
  for (std::size_t i = 0; i < sys.item_count(); ++i) {
    json row = json::array();
    for (std::uint32_t test : sys.row(i).set_bits()) row.push_back(test);
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  out["item_labels"] = sys.item_labels;
  out["test_labels"] = sys.test_labels;
  return dump(out);
}

SetSystem setsystem_from_json(const std::string& text) {
  json value = parse(text);
  try {
    std::size_t m = value.at("m").get<std::size_t>();
    std::size_t n = value.at("n").get<std::size_t>();
    std::vector<std::vector<std::uint32_t>> rows =
        value.at("rows").get<std::vector<std::vector<std::uint32_t>>>();
    if (rows.size() != m) throw ParseError("setsystem: row count differs from m");
    SetSystem sys = SetSystem::from_rows(n, rows);
    if (value.contains("item_labels"))
      sys.item_labels = value.at("item_labels").get<std::vector<std::string>>();
    if (value.contains("test_labels"))
      sys.test_labels = value.at("test_labels").get<std::vector<std::string>>();
    return sys;
  } catch (const json::exception& e) {
    throw ParseError(std::string("setsystem: ") + e.what());
  }
}

std::string covering_to_json(const Covering& covering) {
  json out;
  out["scheme"] = to_string(covering.scheme);
  out["grid_side"] = covering.grid_side;
  out["dim"] = covering.dim;
  json boxes = json::array();
  for (std::size_t i = 0; i < covering.boxes.size(); ++i) {
    json b;
    b["label"] = "Q" + std::to_string(i);
    b["lo"] = covering.boxes[i].lo;
    b["hi"] = covering.boxes[i].hi;
    boxes.push_back(std::move(b));
  }
  out["boxes"] = std::move(boxes);
  return dump(out);
}

Covering covering_from_json(const std::string& text) {
  json value = parse(text);
  Covering covering;
  try {
    covering.scheme = pattern_kind_from_string(value.at("scheme").get<std::string>());
    covering.grid_side = value.at("grid_side").get<int>();
    covering.dim = value.at("dim").get<int>();
    for (const json& b : value.at("boxes")) {
      covering.boxes.push_back(IntBox{b.at("lo").get<std::vector<long long>>(),
                                      b.at("hi").get<std::vector<long long>>()});
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("covering: ") + e.what());
  }
  return covering;
}

std::string weight_report_to_csv(const WeightReport& report) {
  std::ostringstream out;
  out << "box,dims,weight\n";
  for (const BoxWeight& bw : report.boxes) {
    out << bw.index << ',';
    for (std::size_t i = 0; i < bw.sides.size(); ++i) {
      if (i) out << 'x';
      out << bw.sides[i];
    }
    out << ',' << bw.weight << '\n';
  }
  return out.str();
}

Config points_as_config(const PointList& points) {
  Config config;
  config.dim = points.empty() ? 2 : static_cast<int>(points.front().size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    Point p;
    std::string label = "(";
    for (std::size_t j = 0; j < points[i].size(); ++j) {
      p.coords.push_back(BigInt(points[i][j]));
      if (j) label += ',';
      label += std::to_string(points[i][j]);
    }
    label += ')';
    config.points.push_back(std::move(p));
    config.point_labels.push_back(std::move(label));
  }
  return config;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

} // namespace boxtest
