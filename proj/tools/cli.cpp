// Copyright 2026 The extremal-graphs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "extremal/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "extremal/error.hpp"
#include "extremal/experiments.hpp"
#include "extremal/io.hpp"
#include "json.hpp"

namespace extremal::cli {

namespace {

struct Options {
  std::string model = "extremal-direct";
  unsigned t = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 2;
  std::uint64_t seed = 0;
  std::string out;
  std::string in;
  std::optional<std::uint64_t> fit_klo;
  std::optional<std::uint64_t> fit_khi;
  std::uint64_t exact_budget = kDefaultExactBudget;
  std::string spec;
  std::string mode = "formulas";
  unsigned t_max = 0;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_text_file(o.out, text);
  }
}

int cmd_generate(const Options& o, std::ostream& out) {
  Graph g;
  Metadata meta;
  if (o.model == "extremal-direct") {
    g = build_direct(o.t).graph();
    meta = extremal_metadata(o.t);
  } else if (o.model == "extremal-recursive") {
    if (o.t > kRecursiveBudget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "recursive construction is limited to t <= " +
                      std::to_string(kRecursiveBudget));
    }
    g = build_recursive(o.t).graph();
    meta = extremal_metadata(o.t);
  } else {
    const BaConfig cfg{o.n, o.m, o.seed};
    g = generate_ba(cfg);
    meta = ba_metadata(cfg);
  }
  if (o.out.empty()) {
    write_edge_list(out, g, meta);
  } else {
    save_edge_list(o.out, g, meta);
  }
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const EdgeListFile file = load_edge_list(o.in);
  AnalyzeOptions opts;
  opts.fit_k_lo = o.fit_klo;
  opts.fit_k_hi = o.fit_khi;
  opts.exact_budget = o.exact_budget;
  emit(o, out, report_json(analyze(file.graph, file.metadata, opts)));
  return kExitOk;
}

nlohmann::ordered_json check_rows(const std::vector<CheckRow>& rows,
                                  std::optional<unsigned>& first_failure) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"t", r.t}, {"pass", r.pass}, {"detail", r.detail}});
    if (!r.pass && !first_failure) first_failure = r.t;
  }
  return arr;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  nlohmann::ordered_json doc;
  doc["mode"] = o.mode;
  doc["t_max"] = o.t_max;
  std::optional<unsigned> first_failure;

  if (o.mode == "formulas") {
    auto rows = nlohmann::ordered_json::array();
    auto add = [&](const FormulaReport& report) {
      for (const auto& r : report.rows) {
        rows.push_back({{"t", r.t},
                        {"constructor", std::string(to_string(report.constructor))},
                        {"order_expected", r.order_expected},
                        {"order_actual", r.order_actual},
                        {"size_expected", r.size_expected},
                        {"size_actual", r.size_actual},
                        {"pass", r.pass}});
        if (!r.pass && (!first_failure || r.t < *first_failure)) first_failure = r.t;
      }
    };
    add(verify_formulas(o.t_max, Constructor::kDirect));
    add(verify_formulas(std::min(o.t_max, kRecursiveBudget), Constructor::kRecursive));
    doc["rows"] = std::move(rows);
  } else if (o.mode == "equivalence") {
    const auto eq = constructor_equivalence(o.t_max);
    std::vector<CheckRow> rows;
    for (unsigned t = 0; t < eq.size(); ++t) {
      rows.push_back({t, eq[t], eq[t] ? "edge sets equal" : "edge sets differ"});
    }
    doc["rows"] = check_rows(rows, first_failure);
  } else if (o.mode == "degree-table") {
    doc["rows"] = check_rows(verify_degree_tables(o.t_max), first_failure);
  } else if (o.mode == "diameter") {
    doc["rows"] = check_rows(verify_diameters(o.t_max, o.exact_budget), first_failure);
  } else {
    throw Error(ErrorCode::kInvalidParams, "unknown verify mode " + o.mode);
  }

  doc["pass"] = !first_failure.has_value();
  doc["first_failure"] =
      first_failure ? nlohmann::ordered_json(*first_failure) : nlohmann::ordered_json();
  emit(o, out, doc.dump(2) + "\n");
  if (first_failure) {
    err << "verify " << o.mode << ": check failed at t = " << *first_failure << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const std::vector<ModelConfig> spec =
      o.spec.empty() ? default_scaling_spec() : parse_scaling_spec(read_text_file(o.spec));
  ScalingOptions opts;
  opts.exact_budget = o.exact_budget;
  emit(o, out, scaling_csv(diameter_scaling(spec, opts)));
  return kExitOk;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  emit(o, out, dot_string(o.t));
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kSpecError:
      return kExitParse;
    case ErrorCode::kIoFailure:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Extremal scale-free graph construction and verification"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Write a graph as an edge list");
  generate->add_option("--model", o.model, "extremal-direct | extremal-recursive | ba")
      ->check(CLI::IsMember({"extremal-direct", "extremal-recursive", "ba"}));
  generate->add_option("--t", o.t, "Construction step of G*_t");
  generate->add_option("--n", o.n, "Order of the BA graph");
  generate->add_option("--m", o.m, "Edges per new BA vertex");
  generate->add_option("--seed", o.seed, "BA seed");
  generate->add_option("--out", o.out, "Output path (stdout if omitted)");

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze an edge list");
  analyze_cmd->add_option("--in,in", o.in, "Edge list to analyze")->required();
  analyze_cmd->add_option("--fit-klo", o.fit_klo, "Lowest degree in the fit window");
  analyze_cmd->add_option("--fit-khi", o.fit_khi, "Highest degree in the fit window");
  analyze_cmd->add_option("--exact-budget", o.exact_budget,
                          "Largest order for exact all-source BFS");
  analyze_cmd->add_option("--out", o.out, "Report path (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "Check the closed forms and the diameter");
  verify->add_option("--mode", o.mode, "formulas | equivalence | degree-table | diameter")
      ->check(CLI::IsMember({"formulas", "equivalence", "degree-table", "diameter"}));
  verify->add_option("--t-max,--t", o.t_max, "Largest t to check")->required();
  verify->add_option("--exact-budget", o.exact_budget,
                     "Largest order for exact all-source BFS");
  verify->add_option("--out", o.out, "Report path (stdout if omitted)");

  auto* compare = app.add_subcommand("compare", "Diameter scaling table as CSV");
  compare->add_option("--spec", o.spec, "Comparison spec (JSON); built-in default if omitted");
  compare->add_option("--exact-budget", o.exact_budget,
                      "Largest order for exact all-source BFS");
  compare->add_option("--out", o.out, "CSV path (stdout if omitted)");

  auto* dot = app.add_subcommand("export-dot", "Graphviz drawing of G*_t, t <= 3");
  dot->add_option("--t", o.t, "Construction step")->required();
  dot->add_option("--out", o.out, "DOT path (stdout if omitted)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (generate->parsed()) {
      if (o.model == "ba" && o.n == 0) {
        throw Error(ErrorCode::kInvalidParams, "ba needs --n");
      }
      return cmd_generate(o, out);
    }
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (compare->parsed()) return cmd_compare(o, out);
    if (dot->parsed()) return cmd_export_dot(o, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::bad_alloc&) {
    err << "out of memory\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace extremal::cli
