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

#include "extremal/graph.hpp"

namespace extremal {

struct BaConfig {
  std::uint64_t n = 0;
  std::uint64_t m = 1;
  std::uint64_t seed = 0;
};

/// m(n-m-1) + m(m+1)/2.
std::uint64_t ba_edge_count(const BaConfig& cfg);

/// Preferential attachment. Starts from K_{m+1}; every later vertex picks m
/// distinct targets by sampling the running endpoint list uniformly and
/// resampling repeats, so the result is simple and connected.
///
/// The generator is std::mt19937_64 seeded with splitmix64(seed); a given
/// seed yields the same graph on every run of the same build.
/// Throws Error(kInvalidConfig) unless m >= 1 and n >= m + 1.
Graph generate_ba(const BaConfig& cfg);

}  // namespace extremal
