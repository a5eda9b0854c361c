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

#include "extremal/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "extremal/error.hpp"
#include "json.hpp"

namespace extremal {

namespace {

constexpr std::string_view kEdgeListBanner = "# extremal-graphs edge list v1";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

void parse_comment(std::string_view body, Metadata& meta) {
  std::size_t pos = 0;
  while (pos < body.size()) {
    const auto start = body.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto end = body.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = body.size();
    const std::string_view token = body.substr(start, end - start);
    if (const auto eq = token.find('='); eq != std::string_view::npos && eq > 0) {
      meta[std::string(token.substr(0, eq))] = std::string(token.substr(eq + 1));
    }
    pos = end;
  }
}

}  // namespace

Metadata extremal_metadata(unsigned t) {
  return {{"generator", "extremal"}, {"t", std::to_string(t)}};
}

Metadata ba_metadata(const BaConfig& cfg) {
  return {{"generator", "ba"},
          {"m", std::to_string(cfg.m)},
          {"seed", std::to_string(cfg.seed)}};
}

void write_edge_list(std::ostream& out, const Graph& g, const Metadata& metadata) {
  out << kEdgeListBanner << '\n';
  if (auto it = metadata.find("generator"); it != metadata.end()) {
    out << "# generator=" << it->second;
    for (const auto& [key, value] : metadata) {
      if (key != "generator" && key != "n" && key != "edges") {
        out << ' ' << key << '=' << value;
      }
    }
    out << '\n';
  }
  out << "# n=" << g.order() << " edges=" << g.size() << '\n';

  std::string buffer;
  buffer.reserve(1 << 16);
  char num[24];
  auto put = [&](std::uint64_t x) {
    auto [ptr, ec] = std::to_chars(num, num + sizeof num, x);
    buffer.append(num, ptr);
  };
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      put(u);
      buffer.push_back(' ');
      put(v);
      buffer.push_back('\n');
      if (buffer.size() > (1 << 16) - 64) {
        out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        buffer.clear();
      }
    }
  }
  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

std::string edge_list_string(const Graph& g, const Metadata& metadata) {
  std::ostringstream out;
  write_edge_list(out, g, metadata);
  return out.str();
}

EdgeListFile read_edge_list(std::istream& in) {
  Metadata meta;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::uint64_t max_id = 0;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view s = trim(line);
    if (s.empty()) continue;
    if (s.front() == '#') {
      parse_comment(s.substr(1), meta);
      continue;
    }
    const auto gap = s.find_first_of(" \t");
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (gap == std::string_view::npos || !parse_u64(s.substr(0, gap), u) ||
        !parse_u64(trim(s.substr(gap)), v)) {
      throw Error(ErrorCode::kParseError,
                  "expected \"u v\", got \"" + std::string(s) + "\"", line_no);
    }
    if (u == v) {
      throw Error(ErrorCode::kParseError,
                  "self-loop on vertex " + std::to_string(u), line_no);
    }
    max_id = std::max({max_id, u, v});
    edges.emplace_back(u, v);
    edge_lines.push_back(line_no);
  }
  if (in.bad()) throw Error(ErrorCode::kIoFailure, "read failed");

  std::uint64_t n = edges.empty() ? 0 : max_id + 1;
  if (auto it = meta.find("n"); it != meta.end()) {
    if (!parse_u64(it->second, n)) {
      throw Error(ErrorCode::kParseError, "bad vertex count n=" + it->second);
    }
  }
  GraphBuilder builder(n);
  builder.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kParseError,
                  "vertex id exceeds declared n=" + std::to_string(n),
                  edge_lines[i]);
    }
    builder.add_edge(u, v);
  }
  meta.erase("n");
  meta.erase("edges");
  return {std::move(builder).finalize(), std::move(meta)};
}

EdgeListFile parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

void save_edge_list(const std::filesystem::path& path, const Graph& g,
                    const Metadata& metadata) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  write_edge_list(out, g, metadata);
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed: " + path.string());
}

EdgeListFile load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  return read_edge_list(in);
}

AnalysisReport analyze(const Graph& g, const Metadata& metadata,
                       const AnalyzeOptions& opts) {
  AnalysisReport r;
  r.order = g.order();
  r.size = g.size();
  r.connected = is_connected(g);
  r.degree_table = degree_histogram(g);
  r.cumulative = cumulative_distribution(g);
  r.is_complete = is_complete(g);

  FitWindow window = full_fit_window(r.cumulative);
  auto gen = metadata.find("generator");
  auto t_it = metadata.find("t");
  std::uint64_t t = 0;
  if (gen != metadata.end() && gen->second == "extremal" &&
      t_it != metadata.end() && parse_u64(t_it->second, t) && t >= 1 &&
      t <= kMaxRepresentableT) {
    window = extremal_fit_window(static_cast<unsigned>(t));
  }
  if (opts.fit_k_lo) window.k_lo = *opts.fit_k_lo;
  if (opts.fit_k_hi) window.k_hi = *opts.fit_k_hi;
  r.fit_window = window;
  try {
    r.gamma_fit = fit_gamma(r.cumulative, window.k_lo, window.k_hi);
    r.scale_free_plausible = scale_free_verdict(g, *r.gamma_fit, opts.thresholds);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInsufficientPoints) throw;
  }

  if (r.connected && g.order() >= 1) {
    if (g.order() <= opts.exact_budget) {
      r.diameter = exact_diameter(g, {opts.exact_budget, opts.threads});
    } else {
      const DiameterBounds b = fast_diameter_bounds(g);
      r.diameter_bounds = b;
      if (b.lower == b.upper) {
        r.diameter = DiameterResult{b.lower, b.witness, DiameterMethod::kBounded};
      }
    }
  }
  r.extremal_bound_met = r.diameter && r.diameter->diameter == 2;
  return r;
}

namespace {

// Rounds to 15 significant digits; the JSON writer then prints the
// shortest text that reproduces the rounded value.
double round15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

}  // namespace

std::string report_json(const AnalysisReport& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = "extremal-graphs/analysis-report";
  doc["schema_version"] = kReportSchemaVersion;
  doc["order"] = r.order;
  doc["size"] = r.size;
  doc["connected"] = r.connected;

  ordered_json table = ordered_json::array();
  for (const auto& row : r.degree_table) {
    table.push_back({{"degree", row.degree}, {"count", row.count}});
  }
  doc["degree_table"] = std::move(table);

  ordered_json cumulative = ordered_json::array();
  for (const auto& pt : r.cumulative.points) {
    cumulative.push_back(
        {{"degree", pt.degree}, {"at_least", pt.at_least}, {"p", round15(pt.p)}});
  }
  doc["cumulative_distribution"] = std::move(cumulative);

  if (r.gamma_fit) {
    const auto& f = *r.gamma_fit;
    doc["gamma_fit"] = {{"gamma_alpha", round15(f.gamma_alpha)},
                        {"gamma", round15(f.gamma)},
                        {"r_squared", round15(f.r_squared)},
                        {"k_range", {f.k_range.k_lo, f.k_range.k_hi}},
                        {"points", f.points_used}};
  } else {
    doc["gamma_fit"] = nullptr;
  }

  if (r.diameter) {
    doc["diameter"] = {{"value", r.diameter->diameter},
                       {"witness", {r.diameter->witness.first, r.diameter->witness.second}},
                       {"method", std::string(to_string(r.diameter->method))}};
  } else {
    doc["diameter"] = nullptr;
  }
  if (r.diameter_bounds) {
    doc["diameter_bounds"] = {{"lower", r.diameter_bounds->lower},
                              {"upper", r.diameter_bounds->upper}};
  }

  doc["verdicts"] = {{"is_complete", r.is_complete},
                     {"scale_free_plausible", r.scale_free_plausible},
                     {"extremal_bound_met", r.extremal_bound_met}};
  return doc.dump(2) + "\n";
}

std::string dot_string(unsigned t) {
  if (t > 3) {
    throw Error(ErrorCode::kTooLarge,
                "drawings are limited to t <= 3, got t = " + std::to_string(t));
  }
  const ClassifiedGraph cg = build_direct(t);
  std::ostringstream out;
  out << "graph G" << t << " {\n";
  out << "  label=\"G*_" << t << "\";\n";
  out << "  node [shape=circle, style=filled, fontsize=10];\n";
  for (VertexId v = 0; v < cg.graph().order(); ++v) {
    const VertexAddress& a = cg.address_of(v);
    const char* color = "white";
    switch (a.cls.kind) {
      case VertexKind::kHub: color = "blue"; break;
      case VertexKind::kActive: color = "lightblue"; break;
      case VertexKind::kCenter: color = "gray80"; break;
      case VertexKind::kLeaf: color = "white"; break;
    }
    out << "  " << v << " [fillcolor=" << color;
    if (a.cls.kind == VertexKind::kHub) out << ", fontcolor=white";
    out << ", tooltip=\"" << to_string(a) << "\"];\n";
  }
  for (const auto& [u, v] : cg.graph().edges()) {
    out << "  " << u << " -- " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string scaling_csv(const std::vector<ScalingRow>& rows) {
  std::string out = "model,n,params,seed,diameter,method\n";
  for (const auto& r : rows) {
    out += r.model + ',' + std::to_string(r.n) + ',' + r.params + ',' +
           (r.seed ? std::to_string(*r.seed) : std::string()) + ',' +
           std::to_string(r.diameter) + ',' + std::string(to_string(r.method)) +
           '\n';
  }
  return out;
}

namespace {

[[noreturn]] void spec_error(const std::string& msg) {
  throw Error(ErrorCode::kSpecError, msg);
}

std::vector<std::uint64_t> u64_list(const nlohmann::json& entry, const char* key) {
  if (!entry.contains(key)) spec_error(std::string("missing \"") + key + "\"");
  const auto& v = entry.at(key);
  std::vector<std::uint64_t> out;
  auto take = [&](const nlohmann::json& x) {
    if (!x.is_number_unsigned()) {
      spec_error(std::string("\"") + key + "\" must hold non-negative integers");
    }
    out.push_back(x.get<std::uint64_t>());
  };
  if (v.is_array()) {
    for (const auto& x : v) take(x);
  } else {
    take(v);
  }
  return out;
}

}  // namespace

std::vector<ModelConfig> parse_scaling_spec(const std::string& text) {
  if (trim(text).empty()) return {};
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    spec_error(e.what());
  }
  if (!doc.is_object() || !doc.contains("models") || !doc["models"].is_array()) {
    spec_error("expected an object with a \"models\" array");
  }
  std::vector<ModelConfig> spec;
  for (const auto& entry : doc["models"]) {
    if (!entry.is_object() || !entry.contains("model") ||
        !entry["model"].is_string()) {
      spec_error("every model entry needs a \"model\" name");
    }
    const std::string name = entry["model"].get<std::string>();
    if (name == "extremal") {
      for (std::uint64_t t : u64_list(entry, "t")) {
        if (t > kMaxRepresentableT) spec_error("t out of range");
        spec.emplace_back(ExtremalModel{static_cast<unsigned>(t)});
      }
    } else if (name == "ba") {
      const auto ms = u64_list(entry, "m");
      if (ms.size() != 1) spec_error("\"m\" must be a single integer");
      const auto seeds = u64_list(entry, "seeds");
      for (std::uint64_t n : u64_list(entry, "n")) {
        for (std::uint64_t seed : seeds) {
          BaConfig cfg{n, ms.front(), seed};
          if (cfg.m < 1 || cfg.n < cfg.m + 1) {
            spec_error("invalid ba config n=" + std::to_string(n) +
                       " m=" + std::to_string(cfg.m));
          }
          spec.emplace_back(cfg);
        }
      }
    } else {
      spec_error("unknown model \"" + name + "\"");
    }
  }
  return spec;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed: " + path.string());
}

}  // namespace extremal
