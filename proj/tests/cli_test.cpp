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

#include "extremal/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "extremal/io.hpp"
#include "json.hpp"

namespace extremal::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "extremal");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("extremal_cli_" + std::string(::testing::UnitTest::GetInstance()
                                              ->current_test_info()
                                              ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenerateDirectAndRecursiveAgree) {
  ASSERT_EQ(invoke({"generate", "--model", "extremal-direct", "--t", "2", "--out",
                    path("d.txt")}).code,
            kExitOk);
  ASSERT_EQ(invoke({"generate", "--model", "extremal-recursive", "--t", "2", "--out",
                    path("r.txt")}).code,
            kExitOk);
  const std::string d = read_text_file(path("d.txt"));
  EXPECT_EQ(d, read_text_file(path("r.txt")));
  EXPECT_NE(d.find("# n=15"), std::string::npos);
  EXPECT_EQ(load_edge_list(path("d.txt")).graph.size(), 30u);
}

TEST_F(CliTest, GenerateBa) {
  ASSERT_EQ(invoke({"generate", "--model", "ba", "--n", "10", "--m", "2", "--seed", "7",
                    "--out", path("ba.txt")}).code,
            kExitOk);
  const EdgeListFile f = load_edge_list(path("ba.txt"));
  EXPECT_EQ(f.graph.order(), 10u);
  EXPECT_EQ(f.graph.size(), 17u);
  EXPECT_TRUE(is_connected(f.graph));
}

TEST_F(CliTest, GenerateRejectsBadParams) {
  EXPECT_EQ(invoke({"generate", "--model", "ba", "--n", "2", "--m", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"generate", "--model", "nope"}).code, kExitUsage);
  EXPECT_EQ(invoke({"generate", "--model", "extremal-recursive", "--t", "13"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"generate", "--t", "2", "--out", path("missing/dir/x.txt")}).code,
            kExitIo);
}

TEST_F(CliTest, AnalyzeExtremal) {
  ASSERT_EQ(invoke({"generate", "--t", "5", "--out", path("g5.txt")}).code, kExitOk);
  const Result r = invoke({"analyze", "--in", path("g5.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["diameter"]["value"], 2);
  EXPECT_EQ(doc["verdicts"]["extremal_bound_met"], true);
  EXPECT_EQ(doc["gamma_fit"]["k_range"], nlohmann::json::array({7, 33}));
}

TEST_F(CliTest, AnalyzeFlagsAndComplete) {
  write_text_file(path("k6.txt"), "0 1\n0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n2 3\n"
                                  "2 4\n2 5\n3 4\n3 5\n4 5\n");
  const Result r = invoke({"analyze", path("k6.txt"), "--out", path("k6.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(read_text_file(path("k6.json")));
  EXPECT_EQ(doc["verdicts"]["is_complete"], true);
  EXPECT_EQ(doc["diameter"]["value"], 1);
  EXPECT_EQ(doc["verdicts"]["scale_free_plausible"], false);

  ASSERT_EQ(invoke({"generate", "--t", "6", "--out", path("g6.txt")}).code, kExitOk);
  const Result w = invoke({"analyze", path("g6.txt"), "--fit-klo", "5", "--fit-khi", "65",
                           "--exact-budget", "10"});
  ASSERT_EQ(w.code, kExitOk) << w.err;
  const auto wdoc = nlohmann::json::parse(w.out);
  EXPECT_EQ(wdoc["gamma_fit"]["k_range"], nlohmann::json::array({5, 65}));
  EXPECT_EQ(wdoc["diameter"]["method"], "bounded");
}

TEST_F(CliTest, AnalyzeParseError) {
  write_text_file(path("bad.txt"), "0 1\n3 x\n");
  const Result r = invoke({"analyze", path("bad.txt")});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(invoke({"analyze", path("absent.txt")}).code, kExitIo);
}

TEST_F(CliTest, VerifyModes) {
  const Result f = invoke({"verify", "--mode", "formulas", "--t-max", "16"});
  ASSERT_EQ(f.code, kExitOk) << f.err;
  EXPECT_EQ(nlohmann::json::parse(f.out)["pass"], true);

  const Result d = invoke({"verify", "--mode", "diameter", "--t-max", "8"});
  ASSERT_EQ(d.code, kExitOk);
  for (const auto& row : nlohmann::json::parse(d.out)["rows"]) {
    EXPECT_EQ(row["detail"], "exact diameter 2");
  }

  EXPECT_EQ(invoke({"verify", "--mode", "degree-table", "--t-max", "14"}).code, kExitOk);
  EXPECT_EQ(invoke({"verify", "--mode", "equivalence", "--t-max", "6"}).code, kExitOk);
  EXPECT_EQ(invoke({"verify", "--mode", "equivalence", "--t-max", "13"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--mode", "bogus", "--t-max", "1"}).code, kExitUsage);
}

TEST_F(CliTest, ExportDot) {
  ASSERT_EQ(invoke({"export-dot", "--t", "0", "--out", path("g0.dot")}).code, kExitOk);
  const std::string dot = read_text_file(path("g0.dot"));
  EXPECT_EQ(dot.rfind("graph G0 {", 0), 0u);
  EXPECT_NE(dot.find("0 -- 2;"), std::string::npos);
  EXPECT_EQ(invoke({"export-dot", "--t", "4"}).code, kExitUsage);
}

TEST_F(CliTest, CompareSpecs) {
  write_text_file(path("empty.json"), "");
  const Result e = invoke({"compare", "--spec", path("empty.json")});
  ASSERT_EQ(e.code, kExitOk);
  EXPECT_EQ(e.out, "model,n,params,seed,diameter,method\n");

  write_text_file(path("small.json"),
                  R"({"models": [{"model": "extremal", "t": [4, 8]},
                                 {"model": "ba", "n": [300], "m": 2, "seeds": [1]}]})");
  const Result s = invoke({"compare", "--spec", path("small.json"), "--out", path("o.csv")});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  const std::string csv = read_text_file(path("o.csv"));
  EXPECT_NE(csv.find("extremal,63,t=4,,2,exact\n"), std::string::npos);
  EXPECT_NE(csv.find("extremal,1023,t=8,,2,exact\n"), std::string::npos);
  EXPECT_EQ(csv.find("ba,300,m=2,1,"), csv.find('\n') + 1);

  write_text_file(path("broken.json"), "{\"models\": [");
  EXPECT_EQ(invoke({"compare", "--spec", path("broken.json")}).code, kExitParse);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace extremal::cli
