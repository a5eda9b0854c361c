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

#include "extremal/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "extremal/error.hpp"

namespace extremal {

Graph Graph::from_csr(std::vector<std::uint64_t> offsets,
                      std::vector<VertexId> targets) {
  if (offsets.empty() || offsets.front() != 0 ||
      offsets.back() != targets.size() || targets.size() % 2 != 0) {
    throw std::invalid_argument("malformed CSR layout");
  }
  Graph g;
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(targets);
  return g;
}

void Graph::require_vertex(VertexId v) const {
  if (v >= order()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " not in graph of order " +
                    std::to_string(order()));
  }
}

std::uint64_t Graph::degree(VertexId v) const {
  require_vertex(v);
  return offsets_[v + 1] - offsets_[v];
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  require_vertex(v);
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto adj = neighbors(u);
  require_vertex(v);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (VertexId u = 0; u < order(); ++u) {
    for (std::uint64_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
      if (targets_[i] > u) out.emplace_back(u, targets_[i]);
    }
  }
  return out;
}

std::uint64_t Graph::max_degree() const noexcept {
  std::uint64_t best = 0;
  for (VertexId v = 0; v < order(); ++v) {
    best = std::max(best, offsets_[v + 1] - offsets_[v]);
  }
  return best;
}

void Graph::check_invariants() const {
  const std::uint64_t n = order();
  for (VertexId v = 0; v < n; ++v) {
    if (offsets_[v] > offsets_[v + 1]) {
      throw std::logic_error("offsets decrease at " + std::to_string(v));
    }
    auto adj = neighbors(v);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (adj[i] >= n) {
        throw std::logic_error("neighbor out of range at " + std::to_string(v));
      }
      if (adj[i] == v) {
        throw std::logic_error("self-loop at " + std::to_string(v));
      }
      if (i > 0 && adj[i - 1] >= adj[i]) {
        throw std::logic_error("neighbor list of " + std::to_string(v) +
                               " not strictly increasing");
      }
      auto back = neighbors(adj[i]);
      if (!std::binary_search(back.begin(), back.end(), v)) {
        throw std::logic_error("asymmetric edge " + std::to_string(v) + "-" +
                               std::to_string(adj[i]));
      }
    }
  }
}

GraphBuilder& GraphBuilder::add_edge(VertexId u, VertexId v) {
  if (u >= vertex_count_ || v >= vertex_count_) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "edge {" + std::to_string(u) + "," + std::to_string(v) +
                    "} on " + std::to_string(vertex_count_) + " vertices");
  }
  if (u == v) {
    throw Error(ErrorCode::kSelfLoop, "loop at vertex " + std::to_string(u));
  }
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  return *this;
}

namespace {

// Expects pairs normalized to u < v. Sorting them lexicographically fills
// each list with smaller neighbors first, then larger ones, so every list
// comes out increasing without a per-list sort.
Graph build_csr(std::uint64_t n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (const auto& [u, v] : edges) {
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (std::uint64_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];

  std::vector<VertexId> targets(offsets.back());
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    targets[cursor[u]++] = v;
    targets[cursor[v]++] = u;
  }
  return Graph::from_csr(std::move(offsets), std::move(targets));
}

}  // namespace

Graph GraphBuilder::finalize() && {
  return build_csr(vertex_count_, std::move(edges_));
}

Graph GraphBuilder::finalize() const& { return build_csr(vertex_count_, edges_); }

std::vector<std::uint64_t> connected_components(const Graph& g) {
  constexpr auto kUnset = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t n = g.order();
  std::vector<std::uint64_t> comp(n, kUnset);
  std::vector<VertexId> queue;
  queue.reserve(n);
  std::uint64_t next = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (comp[root] != kUnset) continue;
    queue.clear();
    queue.push_back(root);
    comp[root] = next;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : g.neighbors(queue[head])) {
        if (comp[w] == kUnset) {
          comp[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(),
                     [](std::uint64_t c) { return c == 0; });
}

DegreeTable degree_histogram(const Graph& g) {
  std::map<std::uint64_t, std::uint64_t, std::greater<>> counts;
  for (VertexId v = 0; v < g.order(); ++v) ++counts[g.degree(v)];
  DegreeTable table;
  table.reserve(counts.size());
  for (const auto& [k, c] : counts) table.push_back({k, c});
  return table;
}

}  // namespace extremal
