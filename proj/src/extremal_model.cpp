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

#include "extremal/extremal_model.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "extremal/error.hpp"

namespace extremal {

namespace {

int kind_rank(VertexKind k) { return static_cast<int>(k); }

void require_representable(unsigned t) {
  if (t > kMaxRepresentableT) {
    throw Error(ErrorCode::kOverflow,
                "t = " + std::to_string(t) + " exceeds 64-bit vertex ids");
  }
}

std::uint64_t pow2(unsigned e) { return std::uint64_t{1} << e; }

}  // namespace

std::strong_ordering compare_class(const VertexClass& a, const VertexClass& b) {
  if (auto c = kind_rank(a.kind) <=> kind_rank(b.kind); c != 0) return c;
  if (a.kind == VertexKind::kActive) return b.step <=> a.step;
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const VertexAddress& a,
                                 const VertexAddress& b) {
  if (auto c = compare_class(a.cls, b.cls); c != 0) return c;
  // Equal classes have equal path lengths, except across different t.
  if (auto c = a.length <=> b.length; c != 0) return c;
  return a.path <=> b.path;
}

std::string to_string(const VertexClass& c) {
  switch (c.kind) {
    case VertexKind::kHub: return "Hub";
    case VertexKind::kActive: return "Active(" + std::to_string(c.step) + ")";
    case VertexKind::kCenter: return "Center";
    case VertexKind::kLeaf: return "Leaf";
  }
  return "?";
}

std::string to_string(const VertexAddress& a) {
  std::string bits;
  for (unsigned i = a.length; i-- > 0;) bits += ((a.path >> i) & 1) ? '1' : '0';
  return to_string(a.cls) + ":" + bits;
}

ClassifiedGraph::ClassifiedGraph(Graph graph, unsigned t,
                                 std::vector<VertexAddress> addresses)
    : graph_(std::move(graph)), t_(t), addresses_(std::move(addresses)) {
  if (addresses_.size() != graph_.order()) {
    throw std::invalid_argument("address table does not match graph order");
  }
}

std::uint64_t order_formula(unsigned t) {
  if (t + 2 > 64) {
    throw Error(ErrorCode::kOverflow,
                "order 2^(t+2)-1 overflows at t = " + std::to_string(t));
  }
  // 2^64 - 1 when t = 62.
  return t + 2 == 64 ? ~std::uint64_t{0} : pow2(t + 2) - 1;
}

std::uint64_t size_formula(unsigned t) {
  const bool too_wide = t + 1 >= 64;
  const unsigned __int128 value =
      too_wide ? 0 : (static_cast<unsigned __int128>(1) << (t + 1)) * (t + 2) - 2;
  if (too_wide || value > ~std::uint64_t{0}) {
    throw Error(ErrorCode::kOverflow,
                "size 2^(t+1)(t+2)-2 overflows at t = " + std::to_string(t));
  }
  return static_cast<std::uint64_t>(value);
}

std::uint64_t class_degree(const VertexClass& c, unsigned t) {
  switch (c.kind) {
    case VertexKind::kHub: return pow2(t + 2) - 2;
    case VertexKind::kActive: return pow2(c.step + 1) + 1;
    case VertexKind::kCenter: return 3;
    case VertexKind::kLeaf: return t + 1;
  }
  return 0;
}

std::uint64_t class_count(const VertexClass& c, unsigned t) {
  switch (c.kind) {
    case VertexKind::kHub: return 1;
    case VertexKind::kActive:
      return c.step >= 1 && c.step < t ? pow2(t - c.step) : 0;
    case VertexKind::kCenter: return pow2(t);
    case VertexKind::kLeaf: return pow2(t + 1);
  }
  return 0;
}

DegreeTable closed_form_degree_table(unsigned t) {
  if (t == 0) {
    throw Error(ErrorCode::kUnsupportedT,
                "degree table is degenerate for the seed star (t = 0)");
  }
  require_representable(t);
  std::map<std::uint64_t, std::uint64_t, std::greater<>> rows;
  auto add = [&](const VertexClass& c) {
    rows[class_degree(c, t)] += class_count(c, t);
  };
  add(VertexClass::hub());
  for (unsigned s = t - 1; s >= 1; --s) add(VertexClass::active(s));
  add(VertexClass::center());
  add(VertexClass::leaf());

  DegreeTable table;
  for (const auto& [k, n] : rows) table.push_back({k, n});
  return table;
}

namespace {

// Canonical ids are breadth-first positions in the complete binary address
// tree: depth d holds ids 2^d - 1 .. 2^(d+1) - 2 and id 2^d - 1 + p has path p.
VertexAddress heap_address(VertexId v, unsigned t) {
  const unsigned depth = std::bit_width(v + 1) - 1;
  VertexAddress a;
  a.length = depth;
  a.path = v + 1 - pow2(depth);
  if (depth == 0) {
    a.cls = VertexClass::hub();
  } else if (depth == t + 1) {
    a.cls = VertexClass::leaf();
  } else if (depth == t) {
    a.cls = VertexClass::center();
  } else {
    a.cls = VertexClass::active(t - depth);
  }
  return a;
}

}  // namespace

ClassifiedGraph build_direct(unsigned t) {
  require_representable(t);
  const std::uint64_t n = order_formula(t);
  const std::uint64_t m = size_formula(t);
  const std::uint64_t first_leaf = pow2(t + 1) - 1;
  const unsigned leaf_depth = t + 1;

  std::vector<std::uint64_t> offsets(n + 1);
  std::vector<VertexId> targets(2 * m);
  std::vector<VertexAddress> addresses(n);

  std::uint64_t pos = 0;
  offsets[0] = 0;

  // Hub block: adjacent to everything.
  addresses[0] = heap_address(0, t);
  for (VertexId w = 1; w < n; ++w) targets[pos++] = w;
  offsets[1] = pos;

  // Actives and Centers: the hub, then their descendant leaves, which are
  // contiguous at the bottom level.
  for (VertexId v = 1; v < first_leaf; ++v) {
    addresses[v] = heap_address(v, t);
    const unsigned below = leaf_depth - addresses[v].length;
    const VertexId lo = ((v + 1) << below) - 1;
    targets[pos++] = 0;
    for (VertexId w = lo; w < lo + pow2(below); ++w) targets[pos++] = w;
    offsets[v + 1] = pos;
  }

  // Leaves: every ancestor. Parents have smaller ids, so walking upwards
  // and writing backwards yields an increasing list.
  for (VertexId v = first_leaf; v < n; ++v) {
    addresses[v] = heap_address(v, t);
    std::uint64_t end = pos + leaf_depth;
    VertexId a = v;
    for (std::uint64_t i = end; i > pos; --i) {
      a = (a - 1) / 2;
      targets[i - 1] = a;
    }
    pos = end;
    offsets[v + 1] = pos;
  }

  if (pos != 2 * m) {
    throw std::logic_error("direct construction emitted " +
                           std::to_string(pos) + " adjacency entries");
  }
  return ClassifiedGraph(Graph::from_csr(std::move(offsets), std::move(targets)),
                         t, std::move(addresses));
}

RecursiveBuild build_recursive_traced(unsigned t, StepFourRule rule) {
  require_representable(t);

  // Seed star: the center starts out as the hub of G*_0.
  std::vector<VertexAddress> addr = {
      {VertexClass::hub(), 0, 0},
      {VertexClass::leaf(), 0, 1},
      {VertexClass::leaf(), 1, 1},
  };
  std::vector<Edge> edges = {{0, 1}, {0, 2}};
  std::vector<RecursiveStep> trace;

  for (unsigned s = 1; s <= t; ++s) {
    const std::uint64_t old_n = addr.size();
    RecursiveStep rec;
    rec.step = s;

    // Step (iv), applied to the previous graph before it is copied.
    std::vector<Edge> kept;
    kept.reserve(edges.size());
    for (const auto& e : edges) {
      const auto& a = addr[e.first];
      const auto& b = addr[e.second];
      const bool touches_leaf = a.cls.kind == VertexKind::kLeaf ||
                                b.cls.kind == VertexKind::kLeaf;
      bool keep = true;
      if (s >= 2) {
        keep = rule == StepFourRule::kLeafClass
                   ? touches_leaf
                   : (a.length == 2 || b.length == 2);
      }
      if (keep) {
        kept.push_back(e);
        if (s >= 2 && !touches_leaf) rec.kept_all_touch_leaf = false;
      } else {
        ++rec.deleted_per_copy;
        if (touches_leaf) rec.deleted_all_non_leaf = false;
      }
    }

    // Steps (i)-(iii): two relabelled copies and a new hub at index 0.
    std::vector<VertexAddress> next(2 * old_n + 1);
    next[0] = {VertexClass::hub(), 0, 0};
    std::vector<Edge> next_edges;
    next_edges.reserve(2 * kept.size() + 2 * old_n);
    for (std::uint64_t copy = 0; copy < 2; ++copy) {
      const std::uint64_t base = 1 + copy * old_n;
      for (std::uint64_t i = 0; i < old_n; ++i) {
        VertexAddress a = addr[i];
        if (a.cls.kind == VertexKind::kHub) {
          a.cls = s - 1 == 0 ? VertexClass::center()
                             : VertexClass::active(s - 1);
        }
        a.path |= copy << a.length;
        ++a.length;
        next[base + i] = a;
      }
      for (const auto& [u, v] : kept) {
        next_edges.emplace_back(base + u, base + v);
      }
    }
    for (VertexId w = 1; w < next.size(); ++w) next_edges.emplace_back(0, w);

    addr = std::move(next);
    edges = std::move(next_edges);
    rec.order = addr.size();
    rec.size = edges.size();
    trace.push_back(rec);
  }

  // Canonical ids by sorting addresses.
  std::vector<VertexId> by_rank(addr.size());
  std::iota(by_rank.begin(), by_rank.end(), VertexId{0});
  std::sort(by_rank.begin(), by_rank.end(),
            [&](VertexId x, VertexId y) { return addr[x] < addr[y]; });
  std::vector<VertexId> canonical(addr.size());
  std::vector<VertexAddress> sorted(addr.size());
  for (VertexId id = 0; id < by_rank.size(); ++id) {
    canonical[by_rank[id]] = id;
    sorted[id] = addr[by_rank[id]];
  }

  GraphBuilder builder(addr.size());
  builder.reserve(edges.size());
  for (const auto& [u, v] : edges) builder.add_edge(canonical[u], canonical[v]);

  return RecursiveBuild{
      ClassifiedGraph(std::move(builder).finalize(), t, std::move(sorted)),
      std::move(trace)};
}

ClassifiedGraph build_recursive(unsigned t, StepFourRule rule) {
  return std::move(build_recursive_traced(t, rule).graph);
}

ClassCensus class_census(const ClassifiedGraph& cg) {
  const unsigned t = cg.t();
  if (t == 0) {
    throw Error(ErrorCode::kUnsupportedT, "census requires t >= 1");
  }
  ClassCensus census;
  auto flag = [&](std::optional<VertexId> v, std::string msg) {
    if (!census.violation) census.violation = CensusViolation{v, std::move(msg)};
  };

  const Graph& g = cg.graph();
  for (VertexId v = 0; v < g.order(); ++v) {
    const VertexClass& c = cg.address_of(v).cls;
    switch (c.kind) {
      case VertexKind::kHub: ++census.hubs; break;
      case VertexKind::kActive:
        if (c.step < 1 || c.step >= t) {
          flag(v, "active step " + std::to_string(c.step) + " out of 1.." +
                      std::to_string(t - 1));
        }
        ++census.active[c.step];
        break;
      case VertexKind::kCenter: ++census.centers; break;
      case VertexKind::kLeaf: ++census.leaves; break;
    }
    const std::uint64_t expected = class_degree(c, t);
    if (g.degree(v) != expected) {
      flag(v, "vertex " + std::to_string(v) + " (" + to_string(c) +
                  ") has degree " + std::to_string(g.degree(v)) +
                  ", expected " + std::to_string(expected));
    }
  }

  auto check_count = [&](const VertexClass& c, std::uint64_t actual) {
    const std::uint64_t expected = class_count(c, t);
    if (actual != expected) {
      flag(std::nullopt, to_string(c) + " count " + std::to_string(actual) +
                             ", expected " + std::to_string(expected));
    }
  };
  check_count(VertexClass::hub(), census.hubs);
  for (unsigned s = 1; s < t; ++s) {
    auto it = census.active.find(s);
    check_count(VertexClass::active(s), it == census.active.end() ? 0 : it->second);
  }
  check_count(VertexClass::center(), census.centers);
  check_count(VertexClass::leaf(), census.leaves);
  return census;
}

}  // namespace extremal
