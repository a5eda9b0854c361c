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

#include "extremal/baselines.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "extremal/error.hpp"

namespace extremal {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void validate(const BaConfig& cfg) {
  if (cfg.m < 1 || cfg.n < cfg.m + 1) {
    throw Error(ErrorCode::kInvalidConfig,
                "need m >= 1 and n >= m + 1, got n = " + std::to_string(cfg.n) +
                    ", m = " + std::to_string(cfg.m));
  }
}

}  // namespace

std::uint64_t ba_edge_count(const BaConfig& cfg) {
  validate(cfg);
  return cfg.m * (cfg.n - cfg.m - 1) + cfg.m * (cfg.m + 1) / 2;
}

Graph generate_ba(const BaConfig& cfg) {
  const std::uint64_t total = ba_edge_count(cfg);
  const std::uint64_t m = cfg.m;

  GraphBuilder builder(cfg.n);
  builder.reserve(total);
  std::vector<VertexId> endpoints;
  endpoints.reserve(2 * total);

  for (VertexId u = 0; u <= m; ++u) {
    for (VertexId v = u + 1; v <= m; ++v) {
      builder.add_edge(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }

  std::mt19937_64 rng(splitmix64(cfg.seed));
  std::vector<VertexId> chosen;
  chosen.reserve(m);
  for (VertexId v = m + 1; v < cfg.n; ++v) {
    chosen.clear();
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    while (chosen.size() < m) {
      const VertexId target = endpoints[pick(rng)];
      if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) {
        chosen.push_back(target);
      }
    }
    for (VertexId target : chosen) {
      builder.add_edge(v, target);
      endpoints.push_back(target);
      endpoints.push_back(v);
    }
  }
  return std::move(builder).finalize();
}

}  // namespace extremal
