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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "extremal/error.hpp"
#include "oracles.hpp"

namespace extremal {
namespace {

DegreeTable to_table(const std::vector<std::pair<std::size_t, std::size_t>>& rows) {
  DegreeTable out;
  for (const auto& [k, c] : rows) out.push_back({k, c});
  return out;
}

TEST(FormulaTest, Order) {
  EXPECT_EQ(order_formula(0), 3u);
  EXPECT_EQ(order_formula(2), 15u);
  EXPECT_EQ(order_formula(20), 4194303u);  // 4 * 1048576 - 1
}

TEST(FormulaTest, Size) {
  EXPECT_EQ(size_formula(0), 2u);
  EXPECT_EQ(size_formula(2), 30u);
  EXPECT_EQ(size_formula(20), 46137342u);  // 2097152 * 22 - 2
}

TEST(FormulaTest, OverflowReported) {
  EXPECT_EQ(order_formula(62), ~std::uint64_t{0});
  EXPECT_THROW(order_formula(63), Error);
  EXPECT_NO_THROW(size_formula(57));
  EXPECT_THROW(size_formula(58), Error);
  EXPECT_THROW(build_direct(kMaxRepresentableT + 1), Error);
}

TEST(ClosedFormTableTest, SmallT) {
  EXPECT_EQ(closed_form_degree_table(1), (DegreeTable{{6, 1}, {3, 2}, {2, 4}}));
  // Center (3, 4) and Leaf (3, 8) merge.
  EXPECT_EQ(closed_form_degree_table(2), (DegreeTable{{14, 1}, {5, 2}, {3, 12}}));
  const DegreeTable t3 = closed_form_degree_table(3);
  EXPECT_EQ(t3, (DegreeTable{{30, 1}, {9, 2}, {5, 4}, {4, 16}, {3, 8}}));
  std::uint64_t weighted = 0;
  for (const auto& r : t3) weighted += r.degree * r.count;
  EXPECT_EQ(weighted, 156u);
  EXPECT_EQ(weighted, 2 * size_formula(3));
}

TEST(ClosedFormTableTest, TZeroUnsupported) {
  try {
    closed_form_degree_table(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedT);
  }
}

TEST(ClosedFormTableTest, MatchesBruteForce) {
  for (unsigned t = 1; t <= 8; ++t) {
    const auto bf = oracle::brute_force_extremal(t);
    EXPECT_EQ(closed_form_degree_table(t), to_table(oracle::descending(bf.degree_counts)))
        << "t=" << t;
    EXPECT_EQ(bf.hub_degree, order_formula(t) - 1);
  }
}

TEST(BuildDirectTest, Seed) {
  const ClassifiedGraph g = build_direct(0);
  EXPECT_EQ(g.graph().order(), 3u);
  EXPECT_EQ(g.graph().edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
}

TEST(BuildDirectTest, SmallSizesAgreeWithBruteForce) {
  for (unsigned t = 0; t <= 8; ++t) {
    const auto bf = oracle::brute_force_extremal(t);
    const ClassifiedGraph g = build_direct(t);
    EXPECT_EQ(g.graph().order(), bf.n);
    EXPECT_EQ(g.graph().size(), bf.edges.size());
    EXPECT_NO_THROW(g.graph().check_invariants());
  }
  EXPECT_EQ(build_direct(2).graph().degree(0), 14u);
}

TEST(BuildDirectTest, CanonicalIdsFollowAddressOrder) {
  const ClassifiedGraph g = build_direct(4);
  const auto& a = g.addresses();
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LT(a[i - 1], a[i]);
  EXPECT_EQ(g.address_of(0).cls, VertexClass::hub());
  EXPECT_EQ(g.address_of(1).cls, VertexClass::active(3));
  EXPECT_EQ(g.address_of(62).cls, VertexClass::leaf());
}

TEST(BuildRecursiveTest, T1NeedsNoDeletion) {
  const RecursiveBuild r = build_recursive_traced(1);
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(r.steps[0].deleted_per_copy, 0u);
  EXPECT_EQ(r.graph.graph(), build_direct(1).graph());
}

TEST(BuildRecursiveTest, DeletionCounts) {
  const RecursiveBuild r3 = build_recursive_traced(3);
  ASSERT_EQ(r3.steps.size(), 3u);
  EXPECT_EQ(r3.steps[1].deleted_per_copy, 2u);
  EXPECT_EQ(r3.steps[1].size, 30u);
  EXPECT_EQ(r3.steps[2].deleted_per_copy, 6u);
  EXPECT_EQ(r3.steps[2].size, 78u);
  EXPECT_EQ(r3.graph.graph().size(), 78u);

  const auto bf = oracle::brute_force_extremal(5);
  const RecursiveBuild r5 = build_recursive_traced(5);
  for (unsigned s = 1; s <= 5; ++s) {
    EXPECT_EQ(r5.steps[s - 1].deleted_per_copy, bf.deleted_per_copy[s - 1]);
  }
}

TEST(BuildRecursiveTest, DeletedEdgesAreNonLeafAndKeptTouchLeaf) {
  const RecursiveBuild r = build_recursive_traced(9);
  for (const auto& step : r.steps) {
    EXPECT_TRUE(step.deleted_all_non_leaf) << "step " << step.step;
    EXPECT_TRUE(step.kept_all_touch_leaf) << "step " << step.step;
  }
}

TEST(BuildRecursiveTest, DepthRelabelReadingBreaksSizeAtT3) {
  EXPECT_EQ(oracle::brute_force_extremal(3, true).edges.size(), 54u);
  EXPECT_EQ(build_recursive(2, StepFourRule::kDepthRelabel).graph().size(), 30u);
  EXPECT_EQ(build_recursive(3, StepFourRule::kDepthRelabel).graph().size(), 54u);
  EXPECT_NE(build_recursive(3, StepFourRule::kDepthRelabel).graph().size(),
            size_formula(3));
}

TEST(EquivalenceTest, ConstructorsAgreeExactly) {
  for (unsigned t = 0; t <= 10; ++t) {
    const ClassifiedGraph d = build_direct(t);
    const ClassifiedGraph r = build_recursive(t);
    EXPECT_EQ(d.graph(), r.graph()) << "t=" << t;
    EXPECT_EQ(d.addresses(), r.addresses()) << "t=" << t;
  }
}

TEST(StructureTest, EveryEdgeTouchesHubOrLeaf) {
  for (unsigned t = 1; t <= 7; ++t) {
    const ClassifiedGraph g = build_direct(t);
    for (const auto& [u, v] : g.graph().edges()) {
      const bool ok = u == 0 || g.address_of(u).cls.kind == VertexKind::kLeaf ||
                      g.address_of(v).cls.kind == VertexKind::kLeaf;
      EXPECT_TRUE(ok) << u << "-" << v;
    }
  }
}

TEST(StructureTest, LeafNeighborhoodIsItsAncestry) {
  for (unsigned t = 1; t <= 7; ++t) {
    const ClassifiedGraph g = build_direct(t);
    for (VertexId v = 0; v < g.graph().order(); ++v) {
      const VertexAddress& a = g.address_of(v);
      if (a.cls.kind != VertexKind::kLeaf) continue;
      std::set<VertexId> ancestors;
      for (VertexId x = v; x != 0;) {
        x = (x - 1) / 2;
        ancestors.insert(x);
      }
      auto adj = g.graph().neighbors(v);
      EXPECT_EQ(std::set<VertexId>(adj.begin(), adj.end()), ancestors);
      EXPECT_EQ(adj.size(), t + 1u);
      // Parent is the Center, everything else Active or Hub.
      EXPECT_EQ(g.address_of((v - 1) / 2).cls, VertexClass::center());
    }
  }
}

TEST(ClassCensusTest, DirectT2) {
  const ClassCensus c = class_census(build_direct(2));
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.hubs, 1u);
  EXPECT_EQ(c.active, (std::map<unsigned, std::uint64_t>{{1, 2}}));
  EXPECT_EQ(c.centers, 4u);
  EXPECT_EQ(c.leaves, 8u);
}

TEST(ClassCensusTest, RecursiveT4Leaves) {
  const ClassifiedGraph g = build_recursive(4);
  const ClassCensus c = class_census(g);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.leaves, 32u);
  for (VertexId v = 0; v < g.graph().order(); ++v) {
    if (g.address_of(v).cls.kind == VertexKind::kLeaf) {
      EXPECT_EQ(g.graph().degree(v), 5u);
    }
  }
}

TEST(ClassCensusTest, TamperedGraphReported) {
  const ClassifiedGraph g = build_direct(3);
  auto edges = g.graph().edges();
  edges.erase(edges.begin() + 17);
  ClassifiedGraph tampered(oracle::make_graph(g.graph().order(), edges), 3,
                           g.addresses());
  const ClassCensus c = class_census(tampered);
  ASSERT_FALSE(c.ok());
  EXPECT_TRUE(c.violation->vertex.has_value());
}

TEST(ClassCensusTest, TZeroUnsupported) {
  EXPECT_THROW(class_census(build_direct(0)), Error);
}

TEST(AddressTest, PathLengthsPerClass) {
  const unsigned t = 5;
  const ClassifiedGraph g = build_direct(t);
  for (const auto& a : g.addresses()) {
    switch (a.cls.kind) {
      case VertexKind::kHub: EXPECT_EQ(a.length, 0u); break;
      case VertexKind::kActive: EXPECT_EQ(a.length, t - a.cls.step); break;
      case VertexKind::kCenter: EXPECT_EQ(a.length, t); break;
      case VertexKind::kLeaf: EXPECT_EQ(a.length, t + 1); break;
    }
  }
  std::set<std::pair<std::uint64_t, unsigned>> unique;
  for (const auto& a : g.addresses()) unique.insert({a.path, a.length});
  EXPECT_EQ(unique.size(), order_formula(t));
}

}  // namespace
}  // namespace extremal
