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

#include "extremal/experiments.hpp"

#include <algorithm>
#include <tuple>

#include "extremal/error.hpp"

namespace extremal {

std::string_view to_string(Constructor c) {
  return c == Constructor::kDirect ? "direct" : "recursive";
}

ClassifiedGraph build(Constructor c, unsigned t) {
  return c == Constructor::kDirect ? build_direct(t) : build_recursive(t);
}

bool FormulaReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const FormulaRow& r) { return r.pass; });
}

namespace {

void require_budget(unsigned t_max, unsigned budget) {
  if (t_max > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "recursive construction requested up to t = " +
                    std::to_string(t_max) + ", budget is " +
                    std::to_string(budget));
  }
}

}  // namespace

FormulaReport verify_formulas(unsigned t_max, Constructor constructor,
                              unsigned recursive_budget) {
  if (constructor == Constructor::kRecursive) {
    require_budget(t_max, recursive_budget);
  }
  FormulaReport report;
  report.constructor = constructor;
  for (unsigned t = 0; t <= t_max; ++t) {
    FormulaRow row;
    row.t = t;
    row.order_expected = order_formula(t);
    row.size_expected = size_formula(t);
    const ClassifiedGraph g = build(constructor, t);
    row.order_actual = g.graph().order();
    row.size_actual = g.graph().size();
    row.pass = row.order_actual == row.order_expected &&
               row.size_actual == row.size_expected;
    report.rows.push_back(row);
  }
  return report;
}

std::vector<bool> constructor_equivalence(unsigned t_max, unsigned budget,
                                          StepFourRule rule) {
  require_budget(t_max, budget);
  std::vector<bool> out;
  for (unsigned t = 0; t <= t_max; ++t) {
    const ClassifiedGraph direct = build_direct(t);
    const ClassifiedGraph recursive = build_recursive(t, rule);
    out.push_back(direct.graph().order() == recursive.graph().order() &&
                  direct.graph().edges() == recursive.graph().edges());
  }
  return out;
}

std::vector<CheckRow> verify_degree_tables(unsigned t_max) {
  std::vector<CheckRow> rows;
  for (unsigned t = 1; t <= t_max; ++t) {
    const ClassifiedGraph g = build_direct(t);
    const DegreeTable actual = degree_histogram(g.graph());
    const DegreeTable expected = closed_form_degree_table(t);
    const ClassCensus census = class_census(g);
    CheckRow row{t, actual == expected && census.ok(), {}};
    if (actual != expected) {
      row.detail = "degree histogram differs from closed form";
    } else if (!census.ok()) {
      row.detail = census.violation->message;
    } else {
      row.detail = std::to_string(actual.size()) + " rows match";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CheckRow> verify_diameters(unsigned t_max,
                                       std::uint64_t exact_budget) {
  std::vector<CheckRow> rows;
  for (unsigned t = 1; t <= t_max; ++t) {
    const ClassifiedGraph g = build_direct(t);
    CheckRow row{t, false, {}};
    if (g.graph().order() <= exact_budget) {
      const DiameterResult d = exact_diameter(g.graph(), {exact_budget, 0});
      row.pass = d.diameter == 2;
      row.detail = "exact diameter " + std::to_string(d.diameter);
    } else {
      const DiameterBounds b = fast_diameter_bounds(g.graph());
      row.pass = b.lower == 2 && b.upper == 2;
      row.detail = "bounds [" + std::to_string(b.lower) + ", " +
                   std::to_string(b.upper) + "]";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ModelConfig> default_scaling_spec() {
  std::vector<ModelConfig> spec;
  for (unsigned t : {4u, 8u, 12u}) spec.emplace_back(ExtremalModel{t});
  for (std::uint64_t n : {1024u, 4096u, 16384u}) {
    for (std::uint64_t seed : {1u, 2u, 3u}) spec.emplace_back(BaConfig{n, 2, seed});
  }
  return spec;
}

namespace {

Graph materialize(const ModelConfig& config) {
  if (const auto* ex = std::get_if<ExtremalModel>(&config)) {
    return build_direct(ex->t).graph();
  }
  return generate_ba(std::get<BaConfig>(config));
}

ScalingRow measure(const ModelConfig& config, const ScalingOptions& opts) {
  ScalingRow row;
  if (const auto* ex = std::get_if<ExtremalModel>(&config)) {
    row.model = "extremal";
    row.params = "t=" + std::to_string(ex->t);
  } else {
    const auto& ba = std::get<BaConfig>(config);
    row.model = "ba";
    row.params = "m=" + std::to_string(ba.m);
    row.seed = ba.seed;
  }
  const Graph g = materialize(config);
  row.n = g.order();
  if (g.order() <= opts.exact_budget) {
    const DiameterResult d = exact_diameter(g, {opts.exact_budget, opts.threads});
    row.diameter = d.diameter;
    row.witness = d.witness;
    row.method = DiameterMethod::kExact;
  } else {
    const DiameterBounds b = fast_diameter_bounds(g);
    if (b.lower != b.upper) {
      throw Error(ErrorCode::kBudgetExceeded,
                  row.model + " " + row.params + " n=" + std::to_string(row.n) +
                      ": bounds [" + std::to_string(b.lower) + ", " +
                      std::to_string(b.upper) + "] do not pin the diameter");
    }
    row.diameter = b.lower;
    row.witness = b.witness;
    row.method = DiameterMethod::kBounded;
  }
  return row;
}

}  // namespace

std::vector<ScalingRow> diameter_scaling(const std::vector<ModelConfig>& spec,
                                         const ScalingOptions& opts) {
  std::vector<ScalingRow> rows;
  rows.reserve(spec.size());
  for (const auto& config : spec) rows.push_back(measure(config, opts));
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ScalingRow& a, const ScalingRow& b) {
                     return std::tie(a.model, a.n, a.seed) <
                            std::tie(b.model, b.n, b.seed);
                   });
  return rows;
}

bool recheck_witness(const ScalingRow& row, const ModelConfig& config) {
  const Graph g = materialize(config);
  if (row.witness.first >= g.order() || row.witness.second >= g.order()) {
    return false;
  }
  return bfs_distances(g, row.witness.first)[row.witness.second] == row.diameter;
}

}  // namespace extremal
