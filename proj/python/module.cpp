#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "boxtest/constructions.hpp"
#include "boxtest/io.hpp"
#include "boxtest/patterns.hpp"

namespace py = pybind11;
using namespace boxtest;

namespace {

py::object big_to_py(const BigInt& value) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(value.to_string().c_str(), nullptr, 10));
}

py::list coords_to_py(const std::vector<BigInt>& coords) {
  py::list out;
  for (const BigInt& c : coords) out.append(big_to_py(c));
  return out;
}

SepMode mode_from_string(const std::string& mode) {
  if (mode == "exactly") return SepMode::exactly;
  if (mode == "at_most" || mode == "at-most") return SepMode::at_most;
  throw std::invalid_argument("mode must be 'exactly' or 'at_most'");
}

VerifyOptions make_options(std::uint64_t budget, int threads, bool include_empty) {
  VerifyOptions options;
  options.budget = budget;
  options.threads = threads;
  options.include_empty = include_empty;
  return options;
}

py::object witness_to_py(const std::optional<Witness>& witness) {
  if (!witness) return py::none();
  py::dict out;
  if (witness->kind == Witness::Kind::separability_collision) {
    out["kind"] = "separability_collision";
    out["subset_a"] = witness->subset_a;
    out["subset_b"] = witness->subset_b;
  } else {
    out["kind"] = "disjunct_cover";
    out["item"] = witness->item;
    out["subset"] = witness->subset_a;
  }
  return out;
}

py::dict verify_to_py(const VerifyResult& result) {
  py::dict out;
  out["ok"] = result.ok;
  out["witness"] = witness_to_py(result.witness);
  out["enumerated"] = result.enumerated;
  return out;
}

py::dict decode_to_py(const DecodeResult& result) {
  py::dict out;
  switch (result.status) {
    case DecodeResult::Status::ok: out["status"] = "ok"; break;
    case DecodeResult::Status::cardinality_mismatch:
      out["status"] = "cardinality_mismatch";
      break;
    case DecodeResult::Status::no_match: out["status"] = "no_match"; break;
    case DecodeResult::Status::ambiguous: out["status"] = "ambiguous"; break;
  }
  out["items"] = result.items;
  out["witness"] = witness_to_py(result.witness);
  return out;
}

} // namespace

PYBIND11_MODULE(boxtest, m) {
  m.doc() = "geometric group testing: points in Z^d with axis-parallel box tests";

  py::register_exception<BudgetError>(m, "BudgetError");
  py::register_exception<ParseError>(m, "ParseError");

  py::class_<SetSystem>(m, "SetSystem")
      .def(py::init([](std::size_t test_count,
                       const std::vector<std::vector<std::uint32_t>>& rows) {
             return SetSystem::from_rows(test_count, rows);
           }),
           py::arg("test_count"), py::arg("rows"))
      .def_property_readonly("item_count", &SetSystem::item_count)
      .def_property_readonly("test_count", &SetSystem::test_count)
      .def("row", [](const SetSystem& sys, std::size_t i) { return sys.row(i).set_bits(); })
      .def_readwrite("item_labels", &SetSystem::item_labels)
      .def_readwrite("test_labels", &SetSystem::test_labels)
      .def("to_json", [](const SetSystem& sys) { return setsystem_to_json(sys); })
      .def("__eq__", [](const SetSystem& a, const SetSystem& b) { return a == b; })
      .def("__repr__", [](const SetSystem& sys) {
        return "<SetSystem " + std::to_string(sys.item_count()) + " items x " +
               std::to_string(sys.test_count()) + " tests>";
      });

  py::class_<Config>(m, "Config")
      .def_readonly("dim", &Config::dim)
      .def_property_readonly("point_labels",
                             [](const Config& c) { return c.point_labels; })
      .def_property_readonly("box_labels", [](const Config& c) { return c.box_labels; })
      .def_property_readonly("points",
                             [](const Config& c) {
                               py::list out;
                               for (const Point& p : c.points)
                                 out.append(coords_to_py(p.coords));
                               return out;
                             })
      .def_property_readonly("boxes",
                             [](const Config& c) {
                               py::list out;
                               for (const Box& b : c.boxes)
                                 out.append(py::make_tuple(coords_to_py(b.lo),
                                                           coords_to_py(b.hi)));
                               return out;
                             })
      .def_property_readonly("claims",
                             [](const Config& c) -> py::object {
                               if (!c.claims) return py::none();
                               py::dict out;
                               out["construction"] = c.claims->construction;
                               py::dict params;
                               for (const auto& [k, v] : c.claims->params)
                                 params[py::str(k)] = v;
                               out["params"] = params;
                               if (c.claims->disjunct) out["disjunct"] = *c.claims->disjunct;
                               if (c.claims->not_disjunct)
                                 out["not_disjunct"] = *c.claims->not_disjunct;
                               if (c.claims->separable)
                                 out["separable"] = *c.claims->separable;
                               if (c.claims->not_separable)
                                 out["not_separable"] = *c.claims->not_separable;
                               return out;
                             })
      .def("to_json", [](const Config& c) { return config_to_json(c); })
      .def("__repr__", [](const Config& c) {
        return "<Config dim=" + std::to_string(c.dim) + " points=" +
               std::to_string(c.points.size()) + " boxes=" +
               std::to_string(c.boxes.size()) + ">";
      });

  py::class_<Covering>(m, "Covering")
      .def_readonly("grid_side", &Covering::grid_side)
      .def_readonly("dim", &Covering::dim)
      .def_property_readonly("scheme",
                             [](const Covering& c) { return to_string(c.scheme); })
      .def_property_readonly("boxes",
                             [](const Covering& c) {
                               py::list out;
                               for (const IntBox& b : c.boxes)
                                 out.append(py::make_tuple(b.lo, b.hi));
                               return out;
                             })
      .def("to_json", [](const Covering& c) { return covering_to_json(c); });

  // constructions
  m.def("grid_lines", &grid_lines, py::arg("n"), py::arg("d"));
  m.def("embed_grid_lines_2d", &embed_grid_lines_2d, py::arg("n"), py::arg("d"));
  m.def("hyperplane_config", &hyperplane_config, py::arg("k"), py::arg("t"), py::arg("m"));
  m.def("subspace_config", &subspace_config, py::arg("k"), py::arg("d"), py::arg("m"));
  m.def("project_subspace_config", &project_subspace_config, py::arg("k"), py::arg("d"),
        py::arg("m"));
  m.def("single_defective_grid", &single_defective_grid, py::arg("n"));
  m.def("disjoint_boxes", &disjoint_boxes, py::arg("m"), py::arg("d"));
  m.def("long_rect_step", &long_rect_step, py::arg("config"), py::arg("k"));
  m.def("long_rect_tower", &long_rect_tower, py::arg("d"), py::arg("t"), py::arg("m"),
        py::arg("step_copies") = std::vector<int>{});
  m.def("verify_claims", [](const Config& config, std::uint64_t budget, int threads) {
          py::list out;
          for (const ClaimCheck& check :
               verify_claims(config, make_options(budget, threads, true)))
            out.append(py::make_tuple(check.claim, check.ok));
          return out;
        },
        py::arg("config"), py::arg("budget") = VerifyOptions{}.budget,
        py::arg("threads") = 1);

  // geometry
  m.def("induce", &induce, py::arg("config"));
  m.def("is_general_position", &is_general_position, py::arg("config"));
  m.def("to_general_position", &to_general_position, py::arg("config"));
  m.def("compress_to_grid", &compress_to_grid, py::arg("config"));

  // verification, simulation, decoding
  m.def("signature",
        [](const SetSystem& sys, const ItemSet& items) {
          return signature(sys, items).set_bits();
        },
        py::arg("system"), py::arg("items"));
  m.def("run_tests",
        [](const SetSystem& sys, const ItemSet& defectives) {
          return run_tests(sys, defectives).results.set_bits();
        },
        py::arg("system"), py::arg("defectives"));
  m.def("verify_separable",
        [](const SetSystem& sys, int t, const std::string& mode, std::uint64_t budget,
           int threads, bool include_empty) {
          return verify_to_py(verify_separable(sys, t, mode_from_string(mode),
                                               make_options(budget, threads,
                                                            include_empty)));
        },
        py::arg("system"), py::arg("t"), py::arg("mode") = "exactly",
        py::arg("budget") = VerifyOptions{}.budget, py::arg("threads") = 1,
        py::arg("include_empty") = true);
  m.def("verify_disjunct",
        [](const SetSystem& sys, int t, std::uint64_t budget, int threads) {
          return verify_to_py(verify_disjunct(sys, t, make_options(budget, threads, true)));
        },
        py::arg("system"), py::arg("t"), py::arg("budget") = VerifyOptions{}.budget,
        py::arg("threads") = 1);
  m.def("decode_disjunct",
        [](const SetSystem& sys, const std::vector<std::uint32_t>& positives, int t) {
          Outcome outcome{BitVec(sys.test_count())};
          for (std::uint32_t j : positives) outcome.results.set(j);
          return decode_to_py(decode_disjunct(sys, outcome, t));
        },
        py::arg("system"), py::arg("positive_tests"), py::arg("t"));
  m.def("decode_by_signature",
        [](const SetSystem& sys, const std::vector<std::uint32_t>& positives, int t,
           const std::string& mode, std::uint64_t budget) {
          Outcome outcome{BitVec(sys.test_count())};
          for (std::uint32_t j : positives) outcome.results.set(j);
          return decode_to_py(decode_by_signature(sys, outcome, t, mode_from_string(mode),
                                                  make_options(budget, 1, true)));
        },
        py::arg("system"), py::arg("positive_tests"), py::arg("t"),
        py::arg("mode") = "exactly", py::arg("budget") = VerifyOptions{}.budget);

  // patterns & coverings
  m.def("find_pattern",
        [](const PointList& points, const std::string& kind, int dim,
           bool mirrored_z) -> py::object {
          PatternOptions options;
          options.mirrored_z = mirrored_z;
          auto hit = find_pattern(points, pattern_kind_from_string(kind), dim, options);
          if (!hit) return py::none();
          return py::cast(hit->points);
        },
        py::arg("points"), py::arg("kind"), py::arg("dim") = 2,
        py::arg("mirrored_z") = false);
  m.def("stabs",
        [](const PointList& stabbers, const PointList& points, const std::string& kind,
           int dim, bool mirrored_z) {
          PatternOptions options;
          options.mirrored_z = mirrored_z;
          auto result =
              stabs(stabbers, points, pattern_kind_from_string(kind), dim, options);
          py::dict out;
          out["ok"] = result.ok;
          out["unstabbed"] =
              result.unstabbed ? py::cast(result.unstabbed->points) : py::object(py::none());
          return out;
        },
        py::arg("stabbers"), py::arg("points"), py::arg("kind"), py::arg("dim") = 2,
        py::arg("mirrored_z") = false);
  m.def("pattern_weight",
        [](const std::vector<long long>& sides, const std::string& kind) {
          return pattern_weight(sides, pattern_kind_from_string(kind));
        },
        py::arg("sides"), py::arg("kind"));
  m.def("cover",
        [](int n, int dim, const PointList& avoid, const std::string& scheme,
           int split_axis) {
          CoverOptions options;
          options.split_axis = split_axis;
          return cover(n, dim, avoid, pattern_kind_from_string(scheme), options);
        },
        py::arg("n"), py::arg("dim"), py::arg("avoid"), py::arg("scheme"),
        py::arg("split_axis") = 0);
  m.def("covering_check",
        [](const Covering& covering, const PointList& avoid) {
          auto result = covering_check(covering, avoid);
          py::dict out;
          out["ok"] = result.ok;
          out["total_weight"] = result.report.total;
          out["uncovered"] = result.uncovered ? py::cast(*result.uncovered)
                                              : py::object(py::none());
          out["invalid_box"] = result.invalid_box ? py::cast(*result.invalid_box)
                                                  : py::object(py::none());
          return out;
        },
        py::arg("covering"), py::arg("avoid"));
  m.def("hard_instance", &hard_instance, py::arg("k"));
  m.def("brute_pattern_free_max",
        [](const std::vector<int>& sides, const std::string& kind,
           std::uint64_t cell_budget) {
          return brute_pattern_free_max(sides, pattern_kind_from_string(kind), cell_budget);
        },
        py::arg("sides"), py::arg("kind"), py::arg("cell_budget") = 0);

  // io
  m.def("config_from_json", &config_from_json, py::arg("text"));
  m.def("load_config",
        [](const std::string& path) { return config_from_json(read_file(path)); },
        py::arg("path"));
  m.def("save_config",
        [](const Config& config, const std::string& path) {
          write_file(path, config_to_json(config));
        },
        py::arg("config"), py::arg("path"));
}
