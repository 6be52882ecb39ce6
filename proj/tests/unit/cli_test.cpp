// Copyright 2026 The themegraph Authors
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

#include "themegraph/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace themegraph {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::string kDir = THEMEGRAPH_FIXTURES "/souris_clavier/";

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("themegraph_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const auto p = dir_ / name;
    fs::create_directories(p.parent_path());
    std::ofstream(p) << content;
    return p.string();
  }

  Outcome extract(const std::string& doc, std::vector<std::string> extra = {}) {
    std::vector<std::string> args{"extract", "--edges", kDir + "edges.tsv", "--lexicon", kDir + "lexicon.tsv",
                                  "--doc", doc};
    args.insert(args.end(), extra.begin(), extra.end());
    return run(args);
  }

  fs::path dir_;
};

TEST_F(CliTest, ExtractWorkedExample) {
  const auto r = extract(kDir + "doc.txt");
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["doc"], "doc");
  ASSERT_EQ(j["themes"].size(), 1u);
  EXPECT_EQ(j["themes"][0]["node"], "Informatique");
  EXPECT_EQ(j["themes"][0]["flow_exact"], "6");
  ASSERT_EQ(j["themes"][0]["keywords"].size(), 2u);
  EXPECT_EQ(j["themes"][0]["keywords"][0]["node"], "clavier");
  EXPECT_EQ(j["themes"][0]["keywords"][1]["distance"], 3);
}

TEST_F(CliTest, ExtractIsByteIdenticalAcrossRuns) {
  const auto graph1 = (dir_ / "g1.json").string();
  const auto graph2 = (dir_ / "g2.json").string();
  const auto a = extract(kDir + "doc.txt", {"--dump-graph", graph1});
  const auto b = extract(kDir + "doc.txt", {"--dump-graph", graph2});
  EXPECT_EQ(a.out, b.out);
  std::ifstream f1(graph1), f2(graph2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  EXPECT_FALSE(s1.str().empty());
  EXPECT_EQ(s1.str(), s2.str());
  EXPECT_EQ(json::parse(s1.str())["fused_graphs"], 2);
}

TEST_F(CliTest, EmptyDocumentHasNoThemes) {
  const auto r = extract(write("vide.txt", ""));
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(json::parse(r.out)["themes"].empty());
}

TEST_F(CliTest, DirectoryModeMatchesSingleFiles) {
  std::ifstream in(kDir + "doc.txt");
  std::stringstream text;
  text << in.rdbuf();
  write("corpus/a.txt", text.str());
  write("corpus/b.txt", "Le clavier seul.");
  write("corpus/c.txt", "Rien.");
  const auto serial = extract((dir_ / "corpus").string());
  const auto parallel = extract((dir_ / "corpus").string(), {"--jobs", "3"});
  ASSERT_EQ(serial.code, cli::kOk) << serial.err;
  EXPECT_EQ(serial.out, parallel.out);
  const auto j = json::parse(serial.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["doc"], "a");
  EXPECT_EQ(j[2]["doc"], "c");
  EXPECT_EQ(j[0], json::parse(extract((dir_ / "corpus/a.txt").string()).out));
}

TEST_F(CliTest, BadConfigNamesTheField) {
  const auto r = extract(kDir + "doc.txt", {"--config", write("cfg.json", R"({"depth": 0})")});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("depth"), std::string::npos) << r.err;
  const auto unknown = extract(kDir + "doc.txt", {"--config", write("cfg2.json", R"({"colour": 1})")});
  EXPECT_EQ(unknown.code, cli::kUsage);
  EXPECT_NE(unknown.err.find("colour"), std::string::npos) << unknown.err;
}

TEST_F(CliTest, ConfigChangesResult) {
  const auto r = extract(kDir + "doc.txt", {"--config", write("cfg.json", R"({"profile": "constant", "depth": 5})")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(json::parse(r.out)["themes"], json::parse(extract(kDir + "doc.txt").out)["themes"]);
}

TEST_F(CliTest, MissingFilesAndBadUsage) {
  EXPECT_EQ(extract((dir_ / "absent.txt").string()).code, cli::kUsage);
  EXPECT_EQ(run({"extract", "--edges", kDir + "edges.tsv"}).code, cli::kUsage);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
  const auto bad = run({"validate", "--edges", write("bad.tsv", "A\tB\nonly-one-field\n"), "--lexicon",
                        kDir + "lexicon.tsv"});
  EXPECT_EQ(bad.code, cli::kUsage);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
}

TEST_F(CliTest, EvalIdentityAndDisjoint) {
  const auto gold = write("gold.json", R"([{"doc_id": "d", "themes": ["T"], "keywords": ["a", "b"]}])");
  const auto same = write("p1.json", R"({"doc": "d", "themes": [{"node": "T", "kind": "concept",
      "keywords": [{"node": "a", "kind": "entity", "distance": 2}, {"node": "b", "kind": "entity", "distance": 1}]}]})");
  auto r = run({"eval", "--predictions", same, "--gold", gold});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["themes"]["precision"].get<double>(), 1.0);
  EXPECT_EQ(j["keywords"]["recall"].get<double>(), 1.0);

  const auto other = write("p2.json", R"([{"doc": "d", "themes": [{"node": "U", "kind": "concept",
      "keywords": [{"node": "z", "kind": "entity", "distance": 1}]}]}])");
  j = json::parse(run({"eval", "--predictions", other, "--gold", gold}).out);
  EXPECT_EQ(j["themes"]["precision"].get<double>(), 0.0);
  EXPECT_EQ(j["keywords"]["recall"].get<double>(), 0.0);
  EXPECT_EQ(j["keywords"]["fn"], 2);
}

TEST_F(CliTest, EvalReportsUnmatchedAndMissing) {
  const auto gold = write("gold.json", R"([{"doc_id": "d1", "themes": ["T"], "keywords": []},
      {"doc_id": "d2", "themes": ["S"], "keywords": ["k"]}])");
  const auto preds = write("p.json", R"([{"doc": "d1", "themes": [{"node": "T", "kind": "concept", "keywords": []}]},
      {"doc": "stray", "themes": []}])");
  const auto r = run({"eval", "--predictions", preds, "--gold", gold});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["unmatched_docs"], json::array({"stray"}));
  EXPECT_EQ(j["missing_predictions"], json::array({"d2"}));
  EXPECT_EQ(j["documents"], 2);
  EXPECT_EQ(j["themes"]["tp"], 1);
  EXPECT_EQ(j["themes"]["fn"], 1);
  EXPECT_TRUE(j["keywords"]["precision"].is_null());

  const auto dup = write("dup.json", R"([{"doc_id": "d1", "themes": [], "keywords": []},
      {"doc_id": "d1", "themes": [], "keywords": []}])");
  EXPECT_EQ(run({"eval", "--predictions", preds, "--gold", dup}).code, cli::kUsage);
}

TEST_F(CliTest, EvalPluralFolding) {
  const auto gold = write("gold.json", R"([{"doc_id": "d", "themes": ["Graphes"], "keywords": []}])");
  const auto preds = write("p.json", R"([{"doc": "d", "themes": [{"node": "Graphe", "kind": "concept", "keywords": []}]}])");
  auto j = json::parse(run({"eval", "--predictions", preds, "--gold", gold}).out);
  EXPECT_EQ(j["themes"]["tp"], 0);
  j = json::parse(run({"eval", "--predictions", preds, "--gold", gold, "--plural-folding"}).out);
  EXPECT_EQ(j["themes"]["tp"], 1);
}

TEST_F(CliTest, ValidateOutcomes) {
  const auto lex = write("lex.tsv", "a\tB\n");
  auto r = run({"validate", "--edges", write("chain.tsv", "A\tB\nB\tC\n"), "--lexicon", lex});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["cycle_detected"], false);

  r = run({"validate", "--edges", write("loop.tsv", "A\tB\nB\tB\n"), "--lexicon", lex});
  EXPECT_EQ(r.code, cli::kFindings);
  EXPECT_EQ(json::parse(r.out)["self_loop_count"], 1);

  r = run({"validate", "--edges", write("cycle.tsv", "A\tB\nB\tA\n"), "--lexicon", lex});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(json::parse(r.out)["cycle_detected"], true);

  r = run({"validate", "--edges", write("chain2.tsv", "A\tB\n"), "--lexicon", write("orphan.tsv", "x\tZ\n")});
  EXPECT_EQ(r.code, cli::kFindings);
  EXPECT_EQ(json::parse(r.out)["orphan_lexicon_entries"], 1);
}

}  // namespace
}  // namespace themegraph
