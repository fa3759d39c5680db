#ifndef NEGTYPE_CLI_HPP
#define NEGTYPE_CLI_HPP

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "negtype/negtype.hpp"

namespace negtype::cli {

using nlohmann::json;

namespace detail {

inline std::string fmt12(double v) {
  std::ostringstream ss;
  ss << std::setprecision(12) << v;
  return ss.str();
}

inline void print_text(std::ostream& out, const std::string& key,
                       const json& value) {
  if (value.is_number_float())
    out << key << " = " << fmt12(value.get<double>()) << "\n";
  else
    out << key << " = " << value.dump() << "\n";
}

// Flat text rendering of the report: same numbers as the JSON form.
inline void emit(std::ostream& out, const json& report, bool as_json) {
  if (as_json) {
    out << report.dump(2) << "\n";
    return;
  }
  out << "command: " << report.at("command").get<std::string>() << "\n";
  for (const auto& section : {"inputs", "results"}) {
    if (!report.contains(section)) continue;
    for (const auto& [key, value] : report.at(section).items())
      print_text(out, key, value);
  }
  for (const auto& w : report.value("warnings", json::array()))
    out << "warning: " << w.get<std::string>() << "\n";
}

inline json simplex_to_json(const Simplex& s) {
  return json{{"a_side", s.a_side}, {"b_side", s.b_side}};
}

inline json loads_to_json(const LoadVector& loads) {
  return json{{"m", loads.m}, {"w", loads.w}};
}

inline const char* method_name(GapMethod m) {
  switch (m) {
    case GapMethod::ClosedForm: return "closed_form";
    case GapMethod::ProjectedGradient: return "projected_gradient";
    case GapMethod::Enumeration: return "enumeration";
  }
  return "?";
}

inline int default_threads() {
  if (const char* env = std::getenv("NEGTYPE_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

struct SpaceInput {
  std::string path;
  std::string format_in;  // "", "json" or "csv"
  bool semimetric = false;

  SemiMetricSpace load() const {
    std::string fmt = format_in;
    if (fmt.empty()) {
      if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        fmt = "csv";
      else
        fmt = "json";
    }
    if (fmt == "csv") {
      std::ifstream in(path);
      if (!in) throw FileError("cannot open " + path);
      return space_from_csv(in, semimetric ? Mode::SemiMetric : Mode::Metric);
    }
    return space_from_json(load_json_file(path));
  }

  void add_flags(CLI::App* cmd) {
    cmd->add_option("file", path, "space file (.json or .csv)")->required();
    cmd->add_option("--format-in", format_in, "input format override")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--semimetric", semimetric,
                  "treat CSV input as a semi-metric (skip triangle check)");
  }
};

inline json input_digest(const SemiMetricSpace& space) {
  json j{{"n", space.n}, {"mode", mode_name(space.mode)}};
  if (space.n >= 2) j["scaled_diameter"] = scaled_diameter(space);
  return j;
}

}  // namespace detail

// Command dispatch. Exit codes: 0 success, 1 validation/library error,
// 2 usage error.
inline int run(const std::vector<std::string>& argv,
               std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"p-negative type toolkit for finite (semi-)metric spaces"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  int threads = detail::default_threads();
  app.add_option("--threads", threads, "worker threads for gap enumeration")
      ->check(CLI::PositiveNumber);

  detail::SpaceInput validate_in, analyze_in, maxp_in, gap_in;

  auto* cmd_validate =
      app.add_subcommand("validate", "validate a space file and report mode");
  validate_in.add_flags(cmd_validate);

  auto* cmd_analyze = app.add_subcommand(
      "analyze", "scaled diameter, zero gap, zeta and maximal type");
  analyze_in.add_flags(cmd_analyze);

  auto* cmd_maxp =
      app.add_subcommand("maxp", "maximal p-negative type via bisection");
  maxp_in.add_flags(cmd_maxp);
  double maxp_tol = 1e-6;
  cmd_maxp->add_option("--tol", maxp_tol, "bisection bracket width");

  auto* cmd_gap = app.add_subcommand("gap", "negative type gap Gamma_X^p");
  gap_in.add_flags(cmd_gap);
  double gap_p = 0.0;
  int gap_max_n = 12;
  std::uint64_t gap_seed = 0;
  cmd_gap->add_option("--p", gap_p, "exponent p")->required();
  cmd_gap->add_option("--max-n", gap_max_n, "enumeration cap override");
  cmd_gap->add_option("--seed", gap_seed, "restart RNG seed");

  auto* cmd_zeta = app.add_subcommand("zeta", "lower bound zeta(n, D)");
  int zeta_n = 0;
  double zeta_d = 1.0;
  cmd_zeta->add_option("--n", zeta_n, "point count")->required();
  cmd_zeta->add_option("--diameter", zeta_d, "scaled diameter")->required();

  auto* cmd_construct =
      app.add_subcommand("construct", "extremal complete-bipartite space");
  int con_n = 0;
  double con_d = 2.0;
  bool con_semimetric = false;
  std::string con_out;
  cmd_construct->add_option("--n", con_n, "point count")->required();
  cmd_construct->add_option("--diameter", con_d, "scaled diameter")->required();
  cmd_construct->add_flag("--semimetric", con_semimetric,
                          "allow diameters above 2");
  cmd_construct->add_option("--out", con_out, "write space JSON to this file");

  auto* cmd_tree =
      app.add_subcommand("tree-gap", "1-negative type gap of a metric tree");
  std::string tree_path;
  cmd_tree->add_option("treefile", tree_path, "tree JSON file")->required();

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "UsageError: " << e.what() << "\n";
    return 2;
  }
  const bool as_json = format == "json";

  json report{{"command", app.get_subcommands().front()->get_name()},
              {"warnings", json::array()}};
  auto warn = [&](const std::string& msg) { report["warnings"].push_back(msg); };

  try {
    if (*cmd_validate) {
      const SemiMetricSpace space = validate_in.load();
      report["inputs"] = detail::input_digest(space);
      report["results"] = json{{"valid", true}};
      if (space.mode == Mode::SemiMetric)
        warn("semi-metric mode: triangle inequality not checked");
    } else if (*cmd_analyze) {
      const SemiMetricSpace space = analyze_in.load();
      report["inputs"] = detail::input_digest(space);
      json results;
      results["n"] = space.n;
      results["scaled_diameter"] = scaled_diameter(space);
      results["gamma0"] = zero_gap(space.n);
      const MaxTypeResult mt = max_negative_type(space);
      if (mt.p_max)
        results["max_negative_type"] = *mt.p_max;
      else
        results["max_negative_type"] = "unbounded";
      if (space.n >= 3) {
        const ZetaReport zr = strictness_report(space);
        if (zr.zeta)
          results["zeta"] = *zr.zeta;
        else
          results["zeta"] = "unbounded";
        results["strict_interval"] = zr.strict_interval();
        if (zr.metric_bound_only)
          warn("scaled diameter > 2 in metric mode: zeta is a lower bound "
               "with no matching metric construction");
        // Pointwise strictness at a few sample exponents.
        json samples = json::array();
        const double z = zr.zeta ? *zr.zeta : 2.0;
        for (double frac : {0.0, 0.5, 0.9, 1.0}) {
          const double p = frac * z;
          samples.push_back(
              json{{"p", p},
                   {"negative_type", check_negative_type(space, p).holds},
                   {"strict", check_strict_negative_type(space, p).holds}});
        }
        results["strictness_samples"] = std::move(samples);
      }
      report["results"] = std::move(results);
      if (space.mode == Mode::SemiMetric) warn("semi-metric mode");
    } else if (*cmd_maxp) {
      const SemiMetricSpace space = maxp_in.load();
      report["inputs"] = detail::input_digest(space);
      const MaxTypeResult mt = max_negative_type(space, maxp_tol);
      json results;
      if (mt.p_max) {
        results["p_max"] = *mt.p_max;
        results["bracket"] = json{mt.lo, mt.hi};
        results["holds_at_lo"] = check_negative_type(space, mt.lo).holds;
        results["fails_past_hi"] =
            !check_negative_type(space, mt.hi + mt.tolerance).holds;
      } else {
        results["p_max"] = "unbounded";
        results["checked_up_to"] = mt.hi;
      }
      results["tolerance"] = mt.tolerance;
      report["results"] = std::move(results);
    } else if (*cmd_gap) {
      const SemiMetricSpace space = gap_in.load();
      report["inputs"] = detail::input_digest(space);
      GapOptions opts;
      opts.seed = gap_seed;
      opts.max_n = gap_max_n;
      opts.threads = threads;
      const GapResult r = negative_type_gap(space, gap_p, opts);
      report["results"] =
          json{{"p", gap_p},
               {"gamma_star", r.gamma_star},
               {"witness_simplex", detail::simplex_to_json(r.witness_simplex)},
               {"witness_loads", detail::loads_to_json(r.witness_loads)},
               {"method", detail::method_name(r.method)}};
      if (r.convergence_failed)
        warn("ConvergenceFailure: iteration cap hit on some simplex; "
             "reported value is the best found");
    } else if (*cmd_zeta) {
      const auto z = zeta(zeta_n, zeta_d);
      json results{{"n", zeta_n},
                   {"diameter_ratio", zeta_d},
                   {"gamma0", zero_gap(zeta_n)}};
      if (z) {
        results["zeta"] = *z;
        results["strict_interval"] = "[0, " + detail::fmt12(*z) + ")";
      } else {
        results["zeta"] = "unbounded";
        results["strict_interval"] = "[0, inf)";
      }
      report["results"] = std::move(results);
    } else if (*cmd_construct) {
      const SemiMetricSpace space = construct_extremal(
          con_n, con_d, con_semimetric ? Mode::SemiMetric : Mode::Metric);
      report["inputs"] = json{{"n", con_n}, {"diameter_ratio", con_d}};
      const json space_json = space_to_json(space);
      json results{{"zeta", *zeta(con_n, con_d)}};
      if (!con_out.empty()) {
        std::ofstream f(con_out);
        if (!f) throw FileError("cannot write " + con_out);
        f << space_json.dump(2) << "\n";
        results["written"] = con_out;
      } else {
        results["space"] = space_json;
      }
      report["results"] = std::move(results);
    } else if (*cmd_tree) {
      const WeightedTree tree = tree_from_json(load_json_file(tree_path));
      const double gap = tree_one_gap(tree);
      json results{{"n", tree.vertex_count}, {"tree_one_gap", gap}};
      if (tree.vertex_count <= 8) {
        GapOptions opts;
        opts.threads = threads;
        const GapResult r =
            negative_type_gap(tree_metric(tree), 1.0, opts);
        results["enumerated_gap"] = r.gamma_star;
        results["difference"] = std::abs(r.gamma_star - gap);
      }
      report["results"] = std::move(results);
    }
  } catch (const Error& e) {
    report["error"] = json{{"name", e.name()}, {"message", e.what()}};
    detail::emit(out, report, as_json);
    err << e.what() << "\n";
    return 1;
  }

  detail::emit(out, report, as_json);
  return 0;
}

inline int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args);
}

}  // namespace negtype::cli

#endif  // NEGTYPE_CLI_HPP
