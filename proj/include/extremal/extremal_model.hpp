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

// The extremal scale-free family G*_t.
//
// G*_0 is a star with two leaves. G*_s is made from two copies of G*_{s-1}
// plus a new hub joined to every vertex of both copies; from s = 2 on, each
// copy first loses every edge whose endpoints both lie outside the Leaf
// class. The Leaf class is fixed once (the leaves of the seed stars) and is
// never relabelled by depth: relabelling gives 54 edges at t = 3 where the
// closed form requires 78 (see StepFourRule::kDepthRelabel).
//
// Every vertex has an address: a class plus the bit path of copy indices
// leading to it through the duplication hierarchy. The addresses form a
// complete binary tree of depth t+1 rooted at the hub; canonical ids list
// the tree in breadth-first order (class rank, then path). Both
// constructors emit the same canonical edge set.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

/// Largest t whose order 2^(t+2)-1 and address paths fit in 64 bits.
inline constexpr unsigned kMaxRepresentableT = 61;

enum class VertexKind : std::uint8_t { kHub, kActive, kCenter, kLeaf };

struct VertexClass {
  VertexKind kind = VertexKind::kHub;
  /// Construction step that created the vertex; only meaningful for kActive.
  unsigned step = 0;

  static VertexClass hub() { return {VertexKind::kHub, 0}; }
  static VertexClass active(unsigned s) { return {VertexKind::kActive, s}; }
  static VertexClass center() { return {VertexKind::kCenter, 0}; }
  static VertexClass leaf() { return {VertexKind::kLeaf, 0}; }

  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

/// Hub < Active (higher step first) < Center < Leaf.
std::strong_ordering compare_class(const VertexClass& a, const VertexClass& b);

std::string to_string(const VertexClass& c);

struct VertexAddress {
  VertexClass cls;
  /// Copy indices from the hub downwards; bit (length-1-i) is the i-th step.
  std::uint64_t path = 0;
  unsigned length = 0;

  friend bool operator==(const VertexAddress&, const VertexAddress&) = default;

  /// Canonical order: class rank, then path lexicographically.
  friend std::strong_ordering operator<=>(const VertexAddress& a,
                                          const VertexAddress& b);
};

std::string to_string(const VertexAddress& a);

class ClassifiedGraph {
 public:
  ClassifiedGraph(Graph graph, unsigned t,
                  std::vector<VertexAddress> addresses);

  const Graph& graph() const noexcept { return graph_; }
  unsigned t() const noexcept { return t_; }
  const VertexAddress& address_of(VertexId v) const { return addresses_.at(v); }
  const std::vector<VertexAddress>& addresses() const noexcept {
    return addresses_;
  }

 private:
  Graph graph_;
  unsigned t_;
  std::vector<VertexAddress> addresses_;
};

/// 2^(t+2) - 1. Throws Error(kOverflow) past 64 bits.
std::uint64_t order_formula(unsigned t);

/// 2^(t+1) * (t+2) - 2. Throws Error(kOverflow) past 64 bits.
std::uint64_t size_formula(unsigned t);

/// Degree a vertex of class `c` has in G*_t, for t >= 1.
std::uint64_t class_degree(const VertexClass& c, unsigned t);

/// Number of vertices of class `c` in G*_t, for t >= 1.
std::uint64_t class_count(const VertexClass& c, unsigned t);

/// Degree table of G*_t from the closed form. The hub row is n-1 =
/// 2^(t+2)-2, not 2^(t+2): a vertex cannot exceed n-1 neighbors, and G*_1's
/// hub visibly has degree 6. Rows sharing a degree are merged.
/// Throws Error(kUnsupportedT) for t = 0.
DegreeTable closed_form_degree_table(unsigned t);

/// Closed-form construction straight into the CSR layout, no intermediate
/// copies. Edges: each Leaf to all of its tree ancestors (its Center, every
/// Active above it, the Hub) and the Hub to every non-Leaf vertex.
ClassifiedGraph build_direct(unsigned t);

enum class StepFourRule {
  /// Keep intra-copy edges incident to the fixed Leaf class.
  kLeafClass,
  /// Keep intra-copy edges incident to vertices at depth 2 of the copy.
  /// Wrong reading; retained as a regression fixture.
  kDepthRelabel,
};

struct RecursiveStep {
  unsigned step = 0;
  /// Edges removed from each of the two copies.
  std::uint64_t deleted_per_copy = 0;
  /// Whether every removed edge joined two non-Leaf vertices.
  bool deleted_all_non_leaf = true;
  /// Whether every kept intra-copy edge touches a Leaf.
  bool kept_all_touch_leaf = true;
  std::uint64_t order = 0;
  std::uint64_t size = 0;
};

struct RecursiveBuild {
  ClassifiedGraph graph;
  std::vector<RecursiveStep> steps;
};

/// Literal duplicate, delete, attach-hub procedure. Ids are assigned by
/// sorting the addresses, not by formula.
ClassifiedGraph build_recursive(unsigned t,
                                StepFourRule rule = StepFourRule::kLeafClass);

RecursiveBuild build_recursive_traced(
    unsigned t, StepFourRule rule = StepFourRule::kLeafClass);

struct CensusViolation {
  std::optional<VertexId> vertex;
  std::string message;
};

struct ClassCensus {
  std::uint64_t hubs = 0;
  /// Active vertex counts keyed by step.
  std::map<unsigned, std::uint64_t> active;
  std::uint64_t centers = 0;
  std::uint64_t leaves = 0;
  std::optional<CensusViolation> violation;

  bool ok() const noexcept { return !violation.has_value(); }
};

/// Counts vertices per class and checks counts and every degree against the
/// closed form. Reports the first mismatch. Throws Error(kUnsupportedT) for
/// t = 0.
ClassCensus class_census(const ClassifiedGraph& g);

}  // namespace extremal
