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

// Verification campaigns over the extremal family and the baseline.
// Every campaign is deterministic in its inputs.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "extremal/analytics.hpp"
#include "extremal/baselines.hpp"
#include "extremal/extremal_model.hpp"

namespace extremal {

enum class Constructor { kDirect, kRecursive };

std::string_view to_string(Constructor c);

/// Largest t the recursive constructor is run at by default (8191 vertices).
inline constexpr unsigned kRecursiveBudget = 12;

ClassifiedGraph build(Constructor c, unsigned t);

struct FormulaRow {
  unsigned t = 0;
  std::uint64_t order_expected = 0;
  std::uint64_t order_actual = 0;
  std::uint64_t size_expected = 0;
  std::uint64_t size_actual = 0;
  bool pass = false;
};

struct FormulaReport {
  Constructor constructor = Constructor::kDirect;
  std::vector<FormulaRow> rows;

  bool all_pass() const;
};

/// Builds G*_t for t = 0..t_max and compares order and size to the closed
/// forms. Throws Error(kBudgetExceeded) for the recursive constructor past
/// `recursive_budget`.
FormulaReport verify_formulas(unsigned t_max, Constructor constructor,
                              unsigned recursive_budget = kRecursiveBudget);

/// Entry t is true iff both constructors give the same canonical edge set.
/// Throws Error(kBudgetExceeded) when t_max > budget.
std::vector<bool> constructor_equivalence(
    unsigned t_max, unsigned budget = kRecursiveBudget,
    StepFourRule rule = StepFourRule::kLeafClass);

/// One line of a pass/fail battery.
struct CheckRow {
  unsigned t = 0;
  bool pass = false;
  std::string detail;
};

/// degree_histogram(build_direct(t)) == closed_form_degree_table(t) and a
/// clean class census, for t = 1..t_max.
std::vector<CheckRow> verify_degree_tables(unsigned t_max);

/// Diameter of build_direct(t) for t = 1..t_max must be 2. Exact BFS while
/// the order fits `exact_budget`, coinciding fast bounds otherwise.
std::vector<CheckRow> verify_diameters(unsigned t_max,
                                       std::uint64_t exact_budget = kDefaultExactBudget);

struct ExtremalModel {
  unsigned t = 0;
};

using ModelConfig = std::variant<ExtremalModel, BaConfig>;

struct ScalingRow {
  std::string model;
  std::uint64_t n = 0;
  std::string params;
  std::optional<std::uint64_t> seed;
  std::uint64_t diameter = 0;
  DiameterMethod method = DiameterMethod::kExact;
  Edge witness{0, 0};

  friend bool operator==(const ScalingRow&, const ScalingRow&) = default;
};

struct ScalingOptions {
  std::uint64_t exact_budget = kDefaultExactBudget;
  unsigned threads = 0;
};

/// Extremal t in {4, 8, 12}; BA with m = 2, n in {1024, 4096, 16384} and
/// seeds {1, 2, 3}.
std::vector<ModelConfig> default_scaling_spec();

/// One row per config, sorted by (model, n, seed). Rows above the exact
/// budget are reported only when the fast bounds coincide (method kBounded);
/// otherwise Error(kBudgetExceeded).
std::vector<ScalingRow> diameter_scaling(const std::vector<ModelConfig>& spec,
                                         const ScalingOptions& opts = {});

/// Regenerates the row's graph and checks that its witness pair lies at the
/// reported distance.
bool recheck_witness(const ScalingRow& row, const ModelConfig& config);

}  // namespace extremal
