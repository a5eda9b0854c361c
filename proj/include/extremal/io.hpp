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

// File formats.
//
// Edge list (text, '\n' line endings):
//
//   # extremal-graphs edge list v1
//   # generator=extremal t=2
//   # n=15 edges=30
//   0 1
//   0 2
//   ...
//
// Comment lines carry whitespace-separated key=value pairs. Edge lines are
// "u v" in ascii decimal with u < v, sorted lexicographically on export.
// Import accepts either orientation and repeated edges; n defaults to the
// largest id + 1 when the header omits it.
//
// Analysis report: JSON, schema version 1, reals rounded to 15 significant
// digits. Scaling table: CSV with header model,n,params,seed,diameter,method.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extremal/analytics.hpp"
#include "extremal/experiments.hpp"
#include "extremal/extremal_model.hpp"
#include "extremal/graph.hpp"

namespace extremal {

using Metadata = std::map<std::string, std::string>;

struct EdgeListFile {
  Graph graph;
  Metadata metadata;
};

/// Metadata for a G*_t export. Identical for both constructors so their
/// files compare byte for byte.
Metadata extremal_metadata(unsigned t);
Metadata ba_metadata(const BaConfig& cfg);

void write_edge_list(std::ostream& out, const Graph& g,
                     const Metadata& metadata = {});
std::string edge_list_string(const Graph& g, const Metadata& metadata = {});

/// Throws Error(kParseError) carrying the 1-based line number.
EdgeListFile read_edge_list(std::istream& in);
EdgeListFile parse_edge_list(const std::string& text);

/// Throw Error(kIoFailure) when the file cannot be opened or written.
void save_edge_list(const std::filesystem::path& path, const Graph& g,
                    const Metadata& metadata = {});
EdgeListFile load_edge_list(const std::filesystem::path& path);

inline constexpr int kReportSchemaVersion = 1;

struct AnalyzeOptions {
  /// Fit window. Unset: the extremal window when the metadata names an
  /// extremal graph with its t, the full degree range otherwise.
  std::optional<std::uint64_t> fit_k_lo;
  std::optional<std::uint64_t> fit_k_hi;
  std::uint64_t exact_budget = kDefaultExactBudget;
  ScaleFreeThresholds thresholds;
  unsigned threads = 0;
};

struct AnalysisReport {
  std::uint64_t order = 0;
  std::uint64_t size = 0;
  bool connected = false;
  DegreeTable degree_table;
  CumulativeDistribution cumulative;
  std::optional<GammaFit> gamma_fit;
  FitWindow fit_window;
  /// Unset when disconnected or when the bounds do not pin the value.
  std::optional<DiameterResult> diameter;
  std::optional<DiameterBounds> diameter_bounds;
  bool is_complete = false;
  bool scale_free_plausible = false;
  bool extremal_bound_met = false;
};

AnalysisReport analyze(const Graph& g, const Metadata& metadata,
                       const AnalyzeOptions& opts = {});

std::string report_json(const AnalysisReport& report);

/// Graphviz rendering of G*_t with class-based node styles, t <= 3.
/// Throws Error(kTooLarge) above that.
std::string dot_string(unsigned t);

std::string scaling_csv(const std::vector<ScalingRow>& rows);

/// Comparison spec, JSON:
///   {"models": [{"model": "extremal", "t": [4, 8, 12]},
///               {"model": "ba", "n": [1024], "m": 2, "seeds": [1, 2, 3]}]}
/// Blank text is an empty spec. Throws Error(kSpecError).
std::vector<ModelConfig> parse_scaling_spec(const std::string& text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace extremal
