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

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

struct CumulativePoint {
  std::uint64_t degree = 0;
  /// Number of vertices with degree >= `degree`. Exact.
  std::uint64_t at_least = 0;
  /// at_least / n, converted once.
  double p = 0.0;

  friend bool operator==(const CumulativePoint&, const CumulativePoint&) = default;
};

/// Fraction of vertices with degree >= k, one point per distinct degree,
/// sorted by degree ascending.
struct CumulativeDistribution {
  std::uint64_t n = 0;
  std::vector<CumulativePoint> points;
};

CumulativeDistribution cumulative_distribution(const Graph& g);

struct FitWindow {
  std::uint64_t k_lo = 0;
  std::uint64_t k_hi = 0;
};

/// Power-law fit of the cumulative distribution. gamma_alpha is the
/// magnitude of the log-log slope and gamma = gamma_alpha + 1.
struct GammaFit {
  double gamma_alpha = 0.0;
  double gamma = 0.0;
  double r_squared = 0.0;
  FitWindow k_range;
  std::size_t points_used = 0;
};

/// Least squares on (log2 k, log2 p) over points with k_lo <= k <= k_hi.
/// Throws Error(kInsufficientPoints) with fewer than three such points.
GammaFit fit_gamma(const CumulativeDistribution& c, std::uint64_t k_lo,
                   std::uint64_t k_hi);

/// Default fit window for G*_t: degrees strictly above the Leaf degree t+1
/// (the plateau branch of the cumulative distribution) up to the largest
/// Active degree 2^t+1, which leaves out the lone hub point.
FitWindow extremal_fit_window(unsigned t);

/// Smallest to largest distinct degree of `c`.
FitWindow full_fit_window(const CumulativeDistribution& c);

enum class DiameterMethod { kExact, kBounded };

std::string_view to_string(DiameterMethod m);

struct DiameterResult {
  std::uint64_t diameter = 0;
  Edge witness{0, 0};
  DiameterMethod method = DiameterMethod::kExact;
};

struct DiameterBounds {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  /// Pair realizing `lower`.
  Edge witness{0, 0};
};

inline constexpr std::uint64_t kDefaultExactBudget = std::uint64_t{1} << 16;

struct DiameterOptions {
  /// Largest order accepted by exact_diameter.
  std::uint64_t vertex_budget = kDefaultExactBudget;
  /// 0 means hardware concurrency. EXTREMAL_THREADS caps either choice.
  unsigned threads = 0;
};

/// Worker count: `requested` (or hardware concurrency when 0), capped by
/// the EXTREMAL_THREADS environment variable.
unsigned analysis_threads(unsigned requested = 0);

/// Hop distances from `source`; unreachable vertices get UINT64_MAX.
std::vector<std::uint64_t> bfs_distances(const Graph& g, VertexId source);

/// All-source BFS. The witness is the lexicographically smallest (u, v),
/// u < v, at maximum distance, independent of the thread count.
/// Throws Error(kDisconnected) and Error(kBudgetExceeded) when n exceeds the
/// budget.
DiameterResult exact_diameter(const Graph& g, const DiameterOptions& opts = {});

/// Double sweep from vertex 0 for the lower bound; twice the eccentricity of
/// the smallest-id maximum-degree vertex for the upper bound.
/// Throws Error(kDisconnected).
DiameterBounds fast_diameter_bounds(const Graph& g);

/// m == n(n-1)/2. True for n <= 1.
bool is_complete(const Graph& g);

struct ScaleFreeThresholds {
  std::uint64_t min_distinct = 8;
  double min_r2 = 0.95;
};

/// Heuristic classifier: enough distinct degrees, gamma > 1, a good log-log
/// fit, and not complete.
bool scale_free_verdict(const Graph& g, const GammaFit& fit,
                        const ScaleFreeThresholds& thresholds = {});

struct TheoremVerdict {
  bool is_complete = false;
  std::uint64_t diameter = 0;
  DiameterMethod diameter_method = DiameterMethod::kExact;
  bool scale_free_plausible = false;
  bool extremal_bound_met = false;
  std::optional<GammaFit> fit;
};

struct TheoremOptions {
  /// Window for the exponent fit; the full degree range when unset.
  std::optional<FitWindow> window;
  ScaleFreeThresholds thresholds;
  DiameterOptions diameter;
};

/// Evaluates diameter, completeness and scale-freeness of `g` and checks
/// diameter 1 => complete => not scale-free. The diameter is exact within
/// the budget; above it the fast bounds must coincide.
/// Throws Error(kDisconnected), or Error(kBudgetExceeded) when the bounds
/// disagree on an oversized graph.
TheoremVerdict theorem_check(const Graph& g, const TheoremOptions& opts = {});

}  // namespace extremal
