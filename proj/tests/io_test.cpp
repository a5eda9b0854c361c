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

#include "extremal/io.hpp"

#include <gtest/gtest.h>

#include "extremal/error.hpp"
#include "json.hpp"
#include "oracles.hpp"

namespace extremal {
namespace {

TEST(EdgeListTest, ExtremalT2Format) {
  const std::string text = edge_list_string(build_direct(2).graph(), extremal_metadata(2));
  EXPECT_EQ(text.rfind("# extremal-graphs edge list v1\n# generator=extremal t=2\n"
                       "# n=15 edges=30\n0 1\n0 2\n",
                       0),
            0u);
  std::size_t edge_lines = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) edge_lines += line[0] != '#';
  EXPECT_EQ(edge_lines, 30u);
}

TEST(EdgeListTest, ConstructorsExportIdenticalBytes) {
  for (unsigned t = 0; t <= 6; ++t) {
    EXPECT_EQ(edge_list_string(build_direct(t).graph(), extremal_metadata(t)),
              edge_list_string(build_recursive(t).graph(), extremal_metadata(t)));
  }
}

TEST(EdgeListTest, RoundTripKeepsGraphAndMetadata) {
  for (unsigned t = 0; t <= 8; ++t) {
    const Graph g = build_recursive(t).graph();
    const EdgeListFile f = parse_edge_list(edge_list_string(g, extremal_metadata(t)));
    EXPECT_EQ(f.graph, g);
    EXPECT_EQ(f.metadata, extremal_metadata(t));
  }
  const BaConfig cfg{2000, 3, 8};
  const Graph ba = generate_ba(cfg);
  const EdgeListFile f = parse_edge_list(edge_list_string(ba, ba_metadata(cfg)));
  EXPECT_EQ(f.graph, ba);
  EXPECT_EQ(f.metadata.at("seed"), "8");
}

TEST(EdgeListTest, IsolatedTrailingVerticesSurviveViaHeader) {
  const Graph g = oracle::make_graph(6, {{0, 1}});
  EXPECT_EQ(parse_edge_list(edge_list_string(g)).graph.order(), 6u);
}

TEST(EdgeListTest, ParseErrorsCarryLine) {
  try {
    parse_edge_list("# n=4\n0 1\n3 x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_EQ(e.line(), 3u);
  }
  for (const char* bad : {"1 1\n", "0 1 2\n", "-1 2\n", "7\n", "# n=3\n0 5\n"}) {
    EXPECT_THROW(parse_edge_list(bad), Error) << bad;
  }
}

TEST(EdgeListTest, LenientInput) {
  const EdgeListFile f = parse_edge_list("2 0\n0 2\n\n1 2\r\n");
  EXPECT_EQ(f.graph.order(), 3u);
  EXPECT_EQ(f.graph.size(), 2u);
}

TEST(ReportTest, ExtremalT5) {
  const AnalysisReport r = analyze(build_direct(5).graph(), extremal_metadata(5));
  ASSERT_TRUE(r.diameter.has_value());
  EXPECT_EQ(r.diameter->diameter, 2u);
  EXPECT_TRUE(r.extremal_bound_met);
  ASSERT_TRUE(r.gamma_fit.has_value());
  EXPECT_EQ(r.fit_window.k_lo, 7u);
  EXPECT_EQ(r.fit_window.k_hi, 33u);
  // Three Active points (9, 17, 33); least squares on the exact rationals
  // 7/127, 3/127, 1/127 gives 2.23898911069484 (independent computation).
  // At t = 5 the finite-size drift exceeds 0.2.
  EXPECT_NEAR(r.gamma_fit->gamma, 2.23898911069484, 1e-9);

  const auto doc = nlohmann::json::parse(report_json(r));
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["order"], 127);
  EXPECT_EQ(doc["size"], 446);
  EXPECT_EQ(doc["diameter"]["value"], 2);
  EXPECT_EQ(doc["diameter"]["method"], "exact");
  EXPECT_EQ(doc["verdicts"]["extremal_bound_met"], true);
  EXPECT_EQ(doc["gamma_fit"]["k_range"], nlohmann::json::array({7, 33}));
}

TEST(ReportTest, CompleteGraph) {
  const AnalysisReport r = analyze(oracle::complete_graph(6), {});
  EXPECT_TRUE(r.is_complete);
  EXPECT_EQ(r.diameter->diameter, 1u);
  EXPECT_FALSE(r.scale_free_plausible);
  EXPECT_FALSE(r.gamma_fit.has_value());
  const auto doc = nlohmann::json::parse(report_json(r));
  EXPECT_TRUE(doc["gamma_fit"].is_null());
  EXPECT_EQ(doc["verdicts"]["is_complete"], true);
}

TEST(ReportTest, DisconnectedNotedNotFatal) {
  const AnalysisReport r = analyze(oracle::make_graph(4, {{0, 1}, {2, 3}}), {});
  EXPECT_FALSE(r.connected);
  EXPECT_FALSE(r.diameter.has_value());
  const auto doc = nlohmann::json::parse(report_json(r));
  EXPECT_TRUE(doc["diameter"].is_null());
  EXPECT_EQ(doc["connected"], false);
}

TEST(ReportTest, FifteenSignificantDigitsAndStable) {
  const Graph g = build_direct(6).graph();
  const std::string a = report_json(analyze(g, extremal_metadata(6)));
  EXPECT_EQ(a, report_json(analyze(g, extremal_metadata(6))));
  const auto doc = nlohmann::json::parse(a);
  const std::string p = doc["cumulative_distribution"][1].at("p").dump();
  EXPECT_LE(p.size(), 17u);  // "0." plus at most 15 digits
}

TEST(ReportTest, ExplicitWindowOverrides) {
  AnalyzeOptions opts;
  opts.fit_k_lo = 5;
  opts.fit_k_hi = 65;
  const AnalysisReport r = analyze(build_direct(6).graph(), extremal_metadata(6), opts);
  EXPECT_EQ(r.gamma_fit->k_range.k_lo, 5u);
  EXPECT_EQ(r.gamma_fit->k_range.k_hi, 65u);
}

TEST(DotTest, Sizes) {
  const std::string t0 = dot_string(0);
  EXPECT_EQ(std::count(t0.begin(), t0.end(), '-'), 2 * 2);
  const std::string t2 = dot_string(2);
  std::size_t edges = 0;
  std::size_t nodes = 0;
  std::istringstream in(t2);
  for (std::string line; std::getline(in, line);) {
    if (line.find(" -- ") != std::string::npos) ++edges;
    if (line.find("fillcolor") != std::string::npos) ++nodes;
  }
  EXPECT_EQ(edges, 30u);
  EXPECT_EQ(nodes, 15u);
  EXPECT_NE(t2.find("0 [fillcolor=blue"), std::string::npos);
  try {
    dot_string(4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(CsvTest, HeaderAndRows) {
  EXPECT_EQ(scaling_csv({}), "model,n,params,seed,diameter,method\n");
  ScalingRow row;
  row.model = "ba";
  row.n = 1024;
  row.params = "m=2";
  row.seed = 3;
  row.diameter = 7;
  EXPECT_EQ(scaling_csv({row}), "model,n,params,seed,diameter,method\nba,1024,m=2,3,7,exact\n");
}

TEST(SpecTest, Parse) {
  EXPECT_TRUE(parse_scaling_spec("").empty());
  EXPECT_TRUE(parse_scaling_spec("  \n").empty());
  const auto spec = parse_scaling_spec(
      R"({"models": [{"model": "extremal", "t": [4, 8]},
                     {"model": "ba", "n": [100, 200], "m": 2, "seeds": [1, 2, 3]}]})");
  ASSERT_EQ(spec.size(), 8u);
  EXPECT_EQ(std::get<ExtremalModel>(spec[1]).t, 8u);
  EXPECT_EQ(std::get<BaConfig>(spec[7]).n, 200u);
  EXPECT_EQ(std::get<BaConfig>(spec[7]).seed, 3u);
}

TEST(SpecTest, Errors) {
  for (const char* bad :
       {"{", R"({"models": 3})", R"({"models": [{"model": "er"}]})",
        R"({"models": [{"model": "ba", "n": [10], "m": 20, "seeds": [1]}]})",
        R"({"models": [{"model": "extremal", "t": [-1]}]})"}) {
    try {
      parse_scaling_spec(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kSpecError) << bad;
    }
  }
}

}  // namespace
}  // namespace extremal
