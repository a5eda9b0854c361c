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
#include <span>
#include <utility>
#include <vector>

namespace extremal {

/// Dense vertex id in 0..n-1. 64 bits wide so that extremal graphs of
/// order 2^(t+2)-1 stay addressable well past any size that fits in memory.
using VertexId = std::uint64_t;

using Edge = std::pair<VertexId, VertexId>;

struct DegreeRow {
  std::uint64_t degree = 0;
  std::uint64_t count = 0;

  friend bool operator==(const DegreeRow&, const DegreeRow&) = default;
};

/// Rows (k, N_k) with N_k > 0, sorted by degree descending.
using DegreeTable = std::vector<DegreeRow>;

/// Immutable simple undirected graph in compressed sparse row layout.
/// Neighbor lists are strictly increasing and the adjacency is symmetric.
/// Safe for concurrent readers.
class Graph {
 public:
  Graph() : offsets_{0} {}

  /// Adopts an already-valid CSR layout: `offsets` has n+1 entries starting
  /// at 0, every neighbor list is strictly increasing, loop-free and
  /// symmetric. Used by constructors that emit adjacency in order.
  /// Only cheap shape checks are done here; `check_invariants` does the rest.
  static Graph from_csr(std::vector<std::uint64_t> offsets,
                        std::vector<VertexId> targets);

  std::uint64_t order() const noexcept { return offsets_.size() - 1; }
  std::uint64_t size() const noexcept { return targets_.size() / 2; }

  std::uint64_t degree(VertexId v) const;
  std::span<const VertexId> neighbors(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  std::uint64_t max_degree() const noexcept;

  /// Full structural validation (sortedness, symmetry, no loops). Throws
  /// std::logic_error describing the first violation.
  void check_invariants() const;

  std::span<const std::uint64_t> offsets() const noexcept { return offsets_; }
  std::span<const VertexId> targets() const noexcept { return targets_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void require_vertex(VertexId v) const;

  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> targets_;
};

/// Single-owner accumulator for an undirected simple graph. Reversed and
/// repeated insertions collapse to one edge at `finalize`.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::uint64_t vertex_count)
      : vertex_count_(vertex_count) {}

  /// Throws Error(kSelfLoop) for u == v and Error(kVertexOutOfRange) for
  /// ids >= vertex_count.
  GraphBuilder& add_edge(VertexId u, VertexId v);

  void reserve(std::size_t edges) { edges_.reserve(edges); }

  std::uint64_t vertex_count() const noexcept { return vertex_count_; }

  /// Number of insertions so far, duplicates included.
  std::size_t pending_edges() const noexcept { return edges_.size(); }

  Graph finalize() &&;
  Graph finalize() const&;

 private:
  std::uint64_t vertex_count_;
  std::vector<Edge> edges_;
};

bool is_connected(const Graph& g);

/// Connected component id per vertex, numbered in order of smallest member.
std::vector<std::uint64_t> connected_components(const Graph& g);

DegreeTable degree_histogram(const Graph& g);

}  // namespace extremal
