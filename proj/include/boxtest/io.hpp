#pragma once

#include "boxtest/geometry.hpp"
#include "boxtest/patterns.hpp"

#include <string>

namespace boxtest {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All serializers emit stable key order, 2-space indentation and a trailing
// newline, so identical inputs give byte-identical files. Coordinates that
// fit in 64 bits are JSON numbers; larger ones are decimal strings.

std::string config_to_json(const Config& config);
Config config_from_json(const std::string& text);

std::string setsystem_to_json(const SetSystem& sys);
SetSystem setsystem_from_json(const std::string& text);

std::string covering_to_json(const Covering& covering);
Covering covering_from_json(const std::string& text);

std::string weight_report_to_csv(const WeightReport& report);

// Wraps a planar point list as a boxless Config so point sets travel in the
// same file format.
Config points_as_config(const PointList& points);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace boxtest
