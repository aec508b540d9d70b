// boxtest: generate, verify, simulate and cover geometric group-testing
// configurations (points in Z^d, axis-parallel boxes as tests).

#include "boxtest/constructions.hpp"
#include "boxtest/io.hpp"
#include "boxtest/patterns.hpp"
#include "boxtest/rng.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace boxtest;

constexpr int kExitHolds = 0;
constexpr int kExitWitness = 1;
constexpr int kExitError = 2;

std::string label_of(const std::vector<std::string>& labels, std::size_t index,
                     char prefix) {
  if (index < labels.size()) return labels[index];
  return prefix + std::to_string(index);
}

std::string join_items(const SetSystem& sys, const ItemSet& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += label_of(sys.item_labels, items[i], 'x');
  }
  return out;
}

std::string output_format = "text";

std::string json_items(const SetSystem& sys, const ItemSet& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += "\"" + label_of(sys.item_labels, items[i], 'x') + "\"";
  }
  return out + "]";
}

void print_witness(const SetSystem& sys, const Witness& witness) {
  if (output_format == "json") {
    if (witness.kind == Witness::Kind::separability_collision) {
      std::cout << "{\"verdict\":\"witness\",\"kind\":\"separability_collision\","
                << "\"Y\":" << json_items(sys, witness.subset_a)
                << ",\"Z\":" << json_items(sys, witness.subset_b) << "}\n";
    } else {
      std::cout << "{\"verdict\":\"witness\",\"kind\":\"disjunct_cover\",\"x\":\""
                << label_of(sys.item_labels, witness.item, 'x')
                << "\",\"Y\":" << json_items(sys, witness.subset_a) << "}\n";
    }
    return;
  }
  if (witness.kind == Witness::Kind::separability_collision) {
    std::cout << "witness: separability collision\n";
    std::cout << "Y: " << join_items(sys, witness.subset_a) << "\n";
    std::cout << "Z: " << join_items(sys, witness.subset_b) << "\n";
  } else {
    std::cout << "witness: disjunct cover\n";
    std::cout << "x: " << label_of(sys.item_labels, witness.item, 'x') << "\n";
    std::cout << "Y: " << join_items(sys, witness.subset_a) << "\n";
  }
}

// Input files may hold either a geometric Config or a bare SetSystem.
SetSystem load_system(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return induce(config_from_json(text));
  } catch (const ParseError&) {
    return setsystem_from_json(text);
  }
}

struct GenerateArgs {
  std::string name;
  int n = 3, d = 2, k = 1, t = 1, m = 4;
  std::vector<int> copies;
  std::string base = "grid2d";
  std::string base_file;
  std::string out;
  std::string induced_out;
  bool assert_claims = false;
};

Config build_from_registry(const GenerateArgs& args) {
  if (args.name == "grid-lines") return grid_lines(args.n, args.d);
  if (args.name == "single-defective") return single_defective_grid(args.n);
  if (args.name == "disjoint") return disjoint_boxes(args.m, args.d);
  if (args.name == "hyperplane") return hyperplane_config(args.k, args.t, args.m);
  if (args.name == "subspace") return subspace_config(args.k, args.d, args.m);
  if (args.name == "long-rect") {
    Config base;
    if (!args.base_file.empty()) {
      base = config_from_json(read_file(args.base_file));
    } else if (args.base == "grid2d") {
      base = single_defective_grid(args.n);
    } else {
      throw std::invalid_argument("unknown long-rect base: " + args.base);
    }
    return long_rect_step(base, args.k);
  }
  if (args.name == "long-rect-tower")
    return long_rect_tower(args.d, args.t, args.m, args.copies);
  if (args.name == "hard-instance") return points_as_config(hard_instance(args.k));
  throw std::invalid_argument("unknown construction: " + args.name);
}

int cmd_generate(const GenerateArgs& args, const VerifyOptions& options) {
  Config config = build_from_registry(args);
  write_file(args.out, config_to_json(config));
  std::cout << "wrote " << args.out << ": " << config.points.size() << " points, "
            << config.boxes.size() << " boxes, dim " << config.dim << "\n";
  if (!args.induced_out.empty()) {
    write_file(args.induced_out, setsystem_to_json(induce(config)));
    std::cout << "wrote " << args.induced_out << "\n";
  }
  if (args.assert_claims) {
    bool all_ok = true;
    for (const ClaimCheck& check : verify_claims(config, options)) {
      std::cout << "claim " << check.claim << ": " << (check.ok ? "ok" : "FAILED")
                << "\n";
      all_ok = all_ok && check.ok;
    }
    if (!all_ok) return kExitWitness;
  }
  return kExitHolds;
}

int cmd_verify(const std::string& path, int separable, int disjunct, int bar_separable,
               const VerifyOptions& options) {
  SetSystem sys = load_system(path);
  VerifyResult result;
  if (separable > 0) {
    result = verify_separable(sys, separable, SepMode::exactly, options);
  } else if (disjunct > 0) {
    result = verify_disjunct(sys, disjunct, options);
  } else {
    result = verify_separable(sys, bar_separable, SepMode::at_most, options);
  }
  if (result.ok) {
    if (output_format == "json")
      std::cout << "{\"verdict\":\"holds\",\"enumerated\":" << result.enumerated << "}\n";
    else
      std::cout << "enumerated: " << result.enumerated << "\nverdict: holds\n";
    return kExitHolds;
  }
  if (output_format != "json") {
    std::cout << "enumerated: " << result.enumerated << "\nverdict: witness\n";
  }
  print_witness(sys, *result.witness);
  return kExitWitness;
}

struct SimulateArgs {
  std::string path;
  std::string defectives;     // comma-separated labels; empty string = none
  bool defectives_given = false;
  int random_count = -1;
  std::string decoder = "disjunct";
  std::string decode_mode = "exactly";
};

int cmd_simulate(const SimulateArgs& args, std::uint64_t seed,
                 const VerifyOptions& options) {
  SetSystem sys = load_system(args.path);

  ItemSet defectives;
  if (args.random_count >= 0) {
    if (static_cast<std::size_t>(args.random_count) >= sys.item_count())
      throw std::invalid_argument("simulate: need t < item count");
    std::cout << "# rng: splitmix64 seed=" << seed << "\n";
    SplitMix64 rng(seed);
    defectives = sample_distinct(rng, static_cast<std::uint32_t>(sys.item_count()),
                                 static_cast<std::uint32_t>(args.random_count));
  } else {
    std::map<std::string, ItemIndex> by_label;
    for (std::size_t i = 0; i < sys.item_labels.size(); ++i)
      by_label[sys.item_labels[i]] = static_cast<ItemIndex>(i);
    // Labels such as "(1,2,3)" carry commas; only split at parenthesis
    // depth zero.
    std::vector<std::string> labels;
    std::string current;
    int depth = 0;
    for (char c : args.defectives) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        labels.push_back(current);
        current.clear();
      } else {
        current += c;
      }
    }
    labels.push_back(current);
    for (const std::string& label : labels) {
      if (label.empty()) continue;
      auto it = by_label.find(label);
      if (it == by_label.end())
        throw std::invalid_argument("simulate: unknown item label: " + label);
      defectives.push_back(it->second);
    }
    std::sort(defectives.begin(), defectives.end());
    defectives.erase(std::unique(defectives.begin(), defectives.end()),
                     defectives.end());
  }

  Outcome outcome = run_tests(sys, defectives);
  std::string bits;
  for (std::size_t j = 0; j < sys.test_count(); ++j)
    bits += outcome.results.test(j) ? '1' : '0';
  std::string positive;
  for (std::uint32_t j : outcome.results.set_bits()) {
    if (!positive.empty()) positive += ", ";
    positive += label_of(sys.test_labels, j, 'T');
  }
  if (output_format != "json") {
    std::cout << "defectives: " << join_items(sys, defectives) << "\n";
    std::cout << "outcome: " << bits << "\n";
    std::cout << "positive: " << positive << "\n";
  }

  const int t = static_cast<int>(defectives.size());
  DecodeResult decoded;
  if (args.decoder == "disjunct") {
    decoded = decode_disjunct(sys, outcome, t);
  } else if (args.decoder == "signature") {
    SepMode mode = args.decode_mode == "at-most" ? SepMode::at_most : SepMode::exactly;
    decoded = decode_by_signature(sys, outcome, t, mode, options);
  } else {
    throw std::invalid_argument("simulate: unknown decoder: " + args.decoder);
  }

  const bool match =
      decoded.status == DecodeResult::Status::ok && decoded.items == defectives;
  if (output_format == "json") {
    const char* status = decoded.status == DecodeResult::Status::ok ? "ok"
                         : decoded.status == DecodeResult::Status::cardinality_mismatch
                             ? "cardinality_mismatch"
                         : decoded.status == DecodeResult::Status::no_match ? "no_match"
                                                                            : "ambiguous";
    std::cout << "{\"defectives\":" << json_items(sys, defectives) << ",\"outcome\":\""
              << bits << "\",\"decode_status\":\"" << status
              << "\",\"decoded\":" << json_items(sys, decoded.items)
              << ",\"match\":" << (match ? "true" : "false") << "}\n";
    return match ? kExitHolds : kExitWitness;
  }
  switch (decoded.status) {
    case DecodeResult::Status::ok:
      std::cout << "decoded: " << join_items(sys, decoded.items) << "\n";
      break;
    case DecodeResult::Status::cardinality_mismatch:
      std::cout << "decoded: error (survivors: " << join_items(sys, decoded.items)
                << ")\n";
      break;
    case DecodeResult::Status::no_match:
      std::cout << "decoded: error (no admissible subset matches)\n";
      break;
    case DecodeResult::Status::ambiguous:
      std::cout << "decoded: error (ambiguous outcome)\n";
      break;
  }
  std::cout << "match: " << (match ? "yes" : "no") << "\n";
  return match ? kExitHolds : kExitWitness;
}

struct CoverArgs {
  int n = 8, d = 2;
  std::string scheme = "zar";
  std::string points_file;
  int split_axis = 0;
  std::string out;
  std::string report;
};

int cmd_cover(const CoverArgs& args) {
  PointList avoid;
  if (!args.points_file.empty())
    avoid = config_points_as_grid(config_from_json(read_file(args.points_file)));
  CoverOptions options;
  options.split_axis = args.split_axis;
  Covering covering =
      cover(args.n, args.d, avoid, pattern_kind_from_string(args.scheme), options);
  auto checked = covering_check(covering, avoid);
  if (!args.out.empty()) write_file(args.out, covering_to_json(covering));
  if (!args.report.empty()) write_file(args.report, weight_report_to_csv(checked.report));
  std::cout << "grid_side: " << covering.grid_side << "\n";
  std::cout << "boxes: " << covering.boxes.size() << "\n";
  std::cout << "valid: " << (checked.ok ? "yes" : "no") << "\n";
  std::cout << "total_weight: " << checked.report.total << "\n";
  return checked.ok ? kExitHolds : kExitWitness;
}

std::string claims_summary(const Config& config) {
  if (!config.claims) return "";
  std::string out;
  auto add = [&](const char* name, const std::optional<int>& value) {
    if (!value) return;
    if (!out.empty()) out += ';';
    out += name;
    out += '=';
    out += std::to_string(*value);
  };
  add("disjunct", config.claims->disjunct);
  add("not_disjunct", config.claims->not_disjunct);
  add("separable", config.claims->separable);
  add("not_separable", config.claims->not_separable);
  return out;
}

int cmd_stats(const std::vector<std::string>& files, const std::string& out_path) {
  struct Row {
    std::string file, family, params, claims;
    int dim;
    std::size_t points, tests;
    double log_ratio = 0.0;
    bool has_ratio = false;
  };
  std::vector<Row> rows;
  for (const std::string& file : files) {
    Config config = config_from_json(read_file(file));
    Row row;
    row.file = file;
    row.family = config.claims ? config.claims->construction : "";
    if (config.claims) {
      for (const auto& [name, value] : config.claims->params) {
        if (!row.params.empty()) row.params += ';';
        row.params += name + "=" + std::to_string(value);
      }
    }
    row.claims = claims_summary(config);
    row.dim = config.dim;
    row.points = config.points.size();
    row.tests = config.boxes.size();
    if (row.points > 1 && row.tests > 1) {
      row.log_ratio = std::log(static_cast<double>(row.points)) /
                      std::log(static_cast<double>(row.tests));
      row.has_ratio = true;
    }
    rows.push_back(std::move(row));
  }

  // Least-squares slope of log(points) against log(tests) per family.
  std::map<std::string, std::vector<std::size_t>> families;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].has_ratio && !rows[i].family.empty()) families[rows[i].family].push_back(i);
  std::map<std::string, double> slopes;
  for (const auto& [family, members] : families) {
    if (members.size() < 2) continue;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i : members) {
      double x = std::log(static_cast<double>(rows[i].tests));
      double y = std::log(static_cast<double>(rows[i].points));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double count = static_cast<double>(members.size());
    double denom = count * sxx - sx * sx;
    if (denom != 0.0) slopes[family] = (count * sxy - sx * sy) / denom;
  }

  std::ostringstream csv;
  csv << "file,construction,params,dim,points,tests,claims,"
         "log_points_over_log_tests,family_slope\n";
  char buffer[64];
  for (const Row& row : rows) {
    csv << row.file << ',' << row.family << ',' << row.params << ',' << row.dim << ','
        << row.points << ',' << row.tests << ',' << row.claims << ',';
    if (row.has_ratio) {
      std::snprintf(buffer, sizeof buffer, "%.6f", row.log_ratio);
      csv << buffer;
    }
    csv << ',';
    auto slope = slopes.find(row.family);
    if (slope != slopes.end() && row.has_ratio) {
      std::snprintf(buffer, sizeof buffer, "%.6f", slope->second);
      csv << buffer;
    }
    csv << '\n';
  }
  if (out_path.empty())
    std::cout << csv.str();
  else
    write_file(out_path, csv.str());
  return kExitHolds;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometric group testing: points in Z^d, axis-parallel boxes as tests"};
  app.require_subcommand(1);

  std::uint64_t budget = VerifyOptions{}.budget;
  int threads = 1;
  std::uint64_t seed = 0;
  std::string format = "text";
  app.add_option("--budget", budget, "max enumerated subsets per verification");
  app.add_option("--threads", threads, "verifier worker threads");
  app.add_option("--seed", seed, "seed for randomized defective selection");
  app.add_option("--format", format, "output format hint: text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "emit a construction as Config JSON");
  generate->fallthrough();
  generate->add_option("name", gen.name,
                       "grid-lines|single-defective|disjoint|hyperplane|subspace|"
                       "long-rect|long-rect-tower|hard-instance")
      ->required();
  generate->add_option("--n", gen.n, "grid side");
  generate->add_option("--d", gen.d, "dimension");
  generate->add_option("--k", gen.k, "flat dimension / copies / hard-instance k");
  generate->add_option("--t", gen.t, "target disjunctness");
  generate->add_option("--m", gen.m, "grid side (hyperplane/subspace) or item count");
  generate->add_option("--copies", gen.copies, "per-step copy counts for the tower")
      ->delimiter(',');
  generate->add_option("--base", gen.base, "long-rect base registry name (grid2d)");
  generate->add_option("--base-file", gen.base_file, "long-rect base Config file");
  generate->add_option("--out", gen.out, "output path")->required();
  generate->add_option("--induced", gen.induced_out,
                       "also write the induced abstract system as SetSystem JSON");
  generate->add_flag("--assert-claims", gen.assert_claims,
                     "run all attached claims through the verifiers");

  std::string verify_path;
  int opt_separable = 0, opt_disjunct = 0, opt_bar = 0;
  bool exclude_empty = false;
  CLI::App* verify = app.add_subcommand("verify", "check separability/disjunctness");
  verify->fallthrough();
  verify->add_option("input", verify_path, "Config or SetSystem JSON")->required();
  auto* sep_opt = verify->add_option("--separable", opt_separable, "t (exactly)");
  auto* dis_opt = verify->add_option("--disjunct", opt_disjunct, "t");
  auto* bar_opt = verify->add_option("--bar-separable", opt_bar, "t (at most)");
  verify->add_flag("--exclude-empty", exclude_empty,
                   "bar-separable: leave the empty subset out");

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "run tests and decode");
  simulate->fallthrough();
  simulate->add_option("input", sim.path, "Config or SetSystem JSON")->required();
  auto* def_opt = simulate->add_option("--defectives", sim.defectives,
                                       "comma-separated item labels (may be empty)");
  simulate->add_option("--random", sim.random_count, "pick t random defectives");
  simulate->add_option("--decoder", sim.decoder, "disjunct|signature");
  simulate->add_option("--decode-mode", sim.decode_mode, "exactly|at-most");

  CoverArgs cov;
  CLI::App* cover_cmd = app.add_subcommand("cover", "build a valid rectangle covering");
  cover_cmd->fallthrough();
  cover_cmd->add_option("--n", cov.n, "grid side")->required();
  cover_cmd->add_option("--d", cov.d, "dimension");
  cover_cmd->add_option("--scheme", cov.scheme, "zar|zshape|star")->required();
  cover_cmd->add_option("--points", cov.points_file, "Config JSON with points to avoid");
  cover_cmd->add_option("--split-axis", cov.split_axis, "axis for validity splits");
  cover_cmd->add_option("--out", cov.out, "covering JSON path");
  cover_cmd->add_option("--report", cov.report, "weight report CSV path");

  std::vector<std::string> stats_files;
  std::string stats_out;
  CLI::App* stats = app.add_subcommand("stats", "tabulate configs as plot-ready CSV");
  stats->fallthrough();
  stats->add_option("files", stats_files, "Config JSON files")->required();
  stats->add_option("--out", stats_out, "CSV path (default: stdout)");

  std::string embed_kind, embed_out;
  int embed_n = 3, embed_d = 3, embed_k = 1, embed_m = 2;
  CLI::App* embed = app.add_subcommand("embed", "dimension-reducing embeddings");
  embed->fallthrough();
  embed->add_option("kind", embed_kind, "grid-lines (to 2D) | subspace (to d-1)")
      ->required()
      ->check(CLI::IsMember({"grid-lines", "subspace"}));
  embed->add_option("--n", embed_n, "grid side (grid-lines)");
  embed->add_option("--d", embed_d, "dimension");
  embed->add_option("--k", embed_k, "flat dimension (subspace)");
  embed->add_option("--m", embed_m, "grid side (subspace)");
  embed->add_option("--out", embed_out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  output_format = format;
  VerifyOptions options;
  options.budget = budget;
  options.threads = threads;
  options.include_empty = !exclude_empty;

  try {
    if (*generate) return cmd_generate(gen, options);
    if (*verify) {
      const int chosen = (sep_opt->count() ? 1 : 0) + (dis_opt->count() ? 1 : 0) +
                         (bar_opt->count() ? 1 : 0);
      if (chosen != 1) {
        std::cerr << "verify: pass exactly one of --separable/--disjunct/--bar-separable\n";
        return kExitError;
      }
      return cmd_verify(verify_path, opt_separable, opt_disjunct, opt_bar, options);
    }
    if (*simulate) {
      sim.defectives_given = def_opt->count() > 0;
      if (sim.defectives_given == (sim.random_count >= 0)) {
        std::cerr << "simulate: pass exactly one of --defectives/--random\n";
        return kExitError;
      }
      return cmd_simulate(sim, seed, options);
    }
    if (*cover_cmd) return cmd_cover(cov);
    if (*stats) return cmd_stats(stats_files, stats_out);
    if (*embed) {
      Config config = embed_kind == "grid-lines"
                          ? embed_grid_lines_2d(embed_n, embed_d)
                          : project_subspace_config(embed_k, embed_d, embed_m);
      write_file(embed_out, config_to_json(config));
      std::cout << "wrote " << embed_out << ": dim " << config.dim << "\n";
      return kExitHolds;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kExitError;
  } catch (const ParseError& e) {
    std::cerr << "parse: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
