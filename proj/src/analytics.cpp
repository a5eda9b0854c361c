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

#include "extremal/analytics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "extremal/error.hpp"

namespace extremal {

namespace {

constexpr std::uint64_t kUnreached = std::numeric_limits<std::uint64_t>::max();

[[noreturn]] void throw_disconnected() {
  throw Error(ErrorCode::kDisconnected,
              "graph is disconnected; diameter is undefined");
}

}  // namespace

CumulativeDistribution cumulative_distribution(const Graph& g) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (VertexId v = 0; v < g.order(); ++v) ++counts[g.degree(v)];

  CumulativeDistribution c;
  c.n = g.order();
  c.points.resize(counts.size());
  std::uint64_t running = 0;
  std::size_t i = counts.size();
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    running += it->second;
    c.points[--i] = {it->first, running,
                     static_cast<double>(running) / static_cast<double>(c.n)};
  }
  return c;
}

GammaFit fit_gamma(const CumulativeDistribution& c, std::uint64_t k_lo,
                   std::uint64_t k_hi) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& pt : c.points) {
    if (pt.degree < k_lo || pt.degree > k_hi || pt.at_least == 0 ||
        pt.degree == 0) {
      continue;
    }
    xs.push_back(std::log2(static_cast<double>(pt.degree)));
    ys.push_back(std::log2(static_cast<double>(pt.at_least)) -
                 std::log2(static_cast<double>(c.n)));
  }
  if (xs.size() < 3) {
    throw Error(ErrorCode::kInsufficientPoints,
                std::to_string(xs.size()) + " points in degree window [" +
                    std::to_string(k_lo) + ", " + std::to_string(k_hi) +
                    "], need 3");
  }

  const double count = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }

  GammaFit fit;
  const double slope = sxy / sxx;
  fit.gamma_alpha = -slope;
  fit.gamma = fit.gamma_alpha + 1.0;
  // A flat set of points is fitted perfectly by a horizontal line.
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  fit.k_range = {k_lo, k_hi};
  fit.points_used = xs.size();
  return fit;
}

FitWindow extremal_fit_window(unsigned t) {
  return {std::uint64_t{t} + 2, (std::uint64_t{1} << t) + 1};
}

FitWindow full_fit_window(const CumulativeDistribution& c) {
  if (c.points.empty()) return {};
  return {c.points.front().degree, c.points.back().degree};
}

std::string_view to_string(DiameterMethod m) {
  return m == DiameterMethod::kExact ? "exact" : "bounded";
}

unsigned analysis_threads(unsigned requested) {
  unsigned count = requested != 0
                       ? requested
                       : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("EXTREMAL_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && cap > 0) count = std::min<unsigned long>(count, cap);
  }
  return count;
}

std::vector<std::uint64_t> bfs_distances(const Graph& g, VertexId source) {
  std::vector<std::uint64_t> dist(g.order(), kUnreached);
  std::vector<VertexId> queue;
  queue.reserve(g.order());
  dist.at(source) = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

struct Farthest {
  std::uint64_t distance = 0;
  VertexId vertex = 0;
};

// Eccentricity of `source` and the smallest-id vertex attaining it. Reuses
// the caller's buffers across sources.
Farthest sweep(const Graph& g, VertexId source, std::vector<std::uint64_t>& dist,
               std::vector<VertexId>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  Farthest far{0, source};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] != kUnreached) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
      if (dist[w] > far.distance || (dist[w] == far.distance && w < far.vertex)) {
        far = {dist[w], w};
      }
    }
  }
  if (queue.size() != g.order()) throw_disconnected();
  return far;
}

struct Best {
  std::uint64_t diameter = 0;
  Edge witness{0, 0};
  bool set = false;

  void offer(std::uint64_t d, VertexId a, VertexId b) {
    Edge pair{std::min(a, b), std::max(a, b)};
    if (!set || d > diameter || (d == diameter && pair < witness)) {
      diameter = d;
      witness = pair;
      set = true;
    }
  }
};

}  // namespace

DiameterResult exact_diameter(const Graph& g, const DiameterOptions& opts) {
  const std::uint64_t n = g.order();
  if (n > opts.vertex_budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "order " + std::to_string(n) + " exceeds exact budget " +
                    std::to_string(opts.vertex_budget) +
                    "; use fast_diameter_bounds");
  }
  if (!is_connected(g)) throw_disconnected();
  if (n <= 1) return {};

  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(analysis_threads(opts.threads), n));
  std::atomic<VertexId> next{0};
  std::vector<Best> partial(workers);

  auto work = [&](unsigned id) {
    std::vector<std::uint64_t> dist(n);
    std::vector<VertexId> queue;
    queue.reserve(n);
    for (VertexId s = next++; s < n; s = next++) {
      const Farthest f = sweep(g, s, dist, queue);
      partial[id].offer(f.distance, s, f.vertex);
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work, i);
  }

  Best best;
  for (const auto& p : partial) {
    if (p.set) best.offer(p.diameter, p.witness.first, p.witness.second);
  }
  return {best.diameter, best.witness, DiameterMethod::kExact};
}

DiameterBounds fast_diameter_bounds(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n == 0) return {};
  std::vector<std::uint64_t> dist(n);
  std::vector<VertexId> queue;
  queue.reserve(n);

  const Farthest first = sweep(g, 0, dist, queue);
  const Farthest second = sweep(g, first.vertex, dist, queue);

  VertexId hub = 0;
  for (VertexId v = 1; v < n; ++v) {
    if (g.degree(v) > g.degree(hub)) hub = v;
  }
  const Farthest from_hub = sweep(g, hub, dist, queue);

  DiameterBounds b;
  b.lower = second.distance;
  b.upper = 2 * from_hub.distance;
  b.witness = {std::min(first.vertex, second.vertex),
               std::max(first.vertex, second.vertex)};
  return b;
}

bool is_complete(const Graph& g) {
  const std::uint64_t n = g.order();
  return n <= 1 || g.size() == n * (n - 1) / 2;
}

bool scale_free_verdict(const Graph& g, const GammaFit& fit,
                        const ScaleFreeThresholds& thresholds) {
  const std::uint64_t distinct = cumulative_distribution(g).points.size();
  return distinct >= thresholds.min_distinct && fit.gamma > 1.0 &&
         fit.r_squared >= thresholds.min_r2 && !is_complete(g);
}

TheoremVerdict theorem_check(const Graph& g, const TheoremOptions& opts) {
  if (!is_connected(g)) throw_disconnected();

  TheoremVerdict v;
  v.is_complete = is_complete(g);

  if (g.order() <= opts.diameter.vertex_budget) {
    v.diameter = exact_diameter(g, opts.diameter).diameter;
    v.diameter_method = DiameterMethod::kExact;
  } else {
    const DiameterBounds b = fast_diameter_bounds(g);
    if (b.lower != b.upper) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "order exceeds exact budget and bounds [" +
                      std::to_string(b.lower) + ", " + std::to_string(b.upper) +
                      "] do not pin the diameter");
    }
    v.diameter = b.lower;
    v.diameter_method = DiameterMethod::kBounded;
  }

  const CumulativeDistribution cd = cumulative_distribution(g);
  const FitWindow w = opts.window.value_or(full_fit_window(cd));
  try {
    v.fit = fit_gamma(cd, w.k_lo, w.k_hi);
    v.scale_free_plausible = scale_free_verdict(g, *v.fit, opts.thresholds);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInsufficientPoints) throw;
    v.scale_free_plausible = false;
  }
  v.extremal_bound_met = v.diameter == 2;

  // Diameter 1 forces completeness, which rules out a power law.
  if (g.order() >= 2 && (v.diameter == 1) != v.is_complete) {
    throw std::logic_error("diameter 1 and completeness disagree");
  }
  if (v.is_complete && v.scale_free_plausible) {
    throw std::logic_error("complete graph classified as scale-free");
  }
  return v;
}

}  // namespace extremal
