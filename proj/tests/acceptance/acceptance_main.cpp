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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "testing/generators.hpp"
#include "testing/oracles.hpp"
#include "testing/synthetic_corpus.hpp"
#include "themegraph/evaluation.hpp"
#include "themegraph/json_io.hpp"
#include "themegraph/pipeline.hpp"

namespace themegraph {
namespace {

using Clock = std::chrono::steady_clock;
using testing::Rng;

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Node c(const std::string& s) { return Node::concept_node(s); }
Node e(const std::string& s) { return Node::entity(s); }

Verdict worked_example() {
  Verdict v;
  const auto start = Clock::now();
  const std::string dir = THEMEGRAPH_FIXTURES "/souris_clavier/";
  const auto t = load_taxonomy(dir + "edges.tsv", dir + "lexicon.tsv");
  DocumentTrace trace;
  const auto r = extract_document("La souris et le clavier sont branchés sur l'ordinateur.", t, RunConfig{}, &trace);
  if (!trace.graph) {
    v.fail("no graph");
    return v;
  }
  const auto& g = *trace.graph;
  if (out_flow(g, c("Informatique")) != 6) v.fail("out_flow(Informatique) = " + to_string(out_flow(g, c("Informatique"))));
  if (out_flow(g, c("Science")) != 6) v.fail("out_flow(Science) = " + to_string(out_flow(g, c("Science"))));
  if (r.themes.size() != 1 || r.themes[0].node != c("Informatique")) v.fail("themes differ from [Informatique]");
  const std::vector<Keyword> expected{{e("clavier"), 3, c("Informatique")}, {e("souris"), 3, c("Informatique")}};
  if (r.keywords != expected) v.fail("keywords differ from clavier/souris at distance 3");
  const double took = seconds_since(start);
  if (took >= 1.0) v.fail("took " + std::to_string(took) + " s");
  if (v.ok) v.detail = "flows 6/6, themes [Informatique], 2 keywords at distance 3";
  return v;
}

Verdict synthetic_corpus() {
  Verdict v;
  const auto start = Clock::now();
  const auto corpus = testing::make_synthetic_corpus(10);
  const auto t = Taxonomy::from_relations(corpus.edges, corpus.lexicon);
  std::vector<Metrics> per_doc;
  for (const auto& doc : corpus.docs) per_doc.push_back(score(extract_document(doc.text, t, RunConfig{}), doc.gold));
  const auto total = aggregate(per_doc);
  for (const auto& ratio : {total.themes.precision(), total.themes.recall(), total.keywords.precision(),
                            total.keywords.recall()}) {
    if (ratio != Weight(1)) v.fail("a metric is not exactly 1 on the intact taxonomy");
  }

  const std::vector<std::size_t> affected{0, 3, 7};
  const auto damaged = Taxonomy::from_relations(corpus.without_themes(affected), corpus.lexicon);
  for (std::size_t i = 0; i < corpus.docs.size(); ++i) {
    const auto m = score(extract_document(corpus.docs[i].text, damaged, RunConfig{}), corpus.docs[i].gold);
    const bool hit = std::find(affected.begin(), affected.end(), i) != affected.end();
    if (hit && m.themes.recall() != Weight(0)) v.fail("theme recall not 0 for perturbed " + corpus.docs[i].id);
    if (!hit && m.themes.recall() != Weight(1)) v.fail("theme recall changed for untouched " + corpus.docs[i].id);
  }
  const double took = seconds_since(start);
  if (took >= 5.0) v.fail("took " + std::to_string(took) + " s");
  if (v.ok) v.detail = "10 documents at 1.0, 3 perturbed documents at theme recall 0";
  return v;
}

Verdict fusion_conservation() {
  Verdict v;
  Rng rng(1001);
  for (int round = 0; round < 200; ++round) {
    const auto graphs = testing::random_graph_set(rng);
    Weight expected = 0;
    for (const auto& g : graphs) expected += g.total_weight();
    const auto fused = fuse(std::span<const EntityGraph>(graphs), FusionConfig{});
    if (fused.total_weight() != expected) {
      v.fail("set " + std::to_string(round) + ": " + to_string(fused.total_weight()) + " != " + to_string(expected));
    }
  }
  if (v.ok) v.detail = "200 sets, exact";
  return v;
}

Verdict fusion_order_independence() {
  Verdict v;
  Rng rng(2002);
  const Combiner::Kind combiners[] = {Combiner::Kind::kSum, Combiner::Kind::kWeightedSum};
  const ExclusivePolicy::Kind policies[] = {ExclusivePolicy::Kind::kKeep, ExclusivePolicy::Kind::kAttenuate};
  for (int round = 0; round < 100; ++round) {
    const auto graphs = testing::random_graph_set(rng);
    for (auto ck : combiners) {
      for (auto pk : policies) {
        const auto cfg = testing::random_fusion_config(rng, ck, pk);
        const auto reference = to_json(fuse(std::span<const EntityGraph>(graphs), cfg)).dump(2);
        for (int p = 0; p < 5; ++p) {
          auto shuffled = graphs;
          std::shuffle(shuffled.begin(), shuffled.end(), rng);
          if (to_json(fuse(std::span<const EntityGraph>(shuffled), cfg)).dump(2) != reference) {
            v.fail("set " + std::to_string(round) + " differs under " + to_string(cfg.combiner) + "/" +
                   to_string(cfg.exclusive));
          }
        }
      }
    }
  }
  if (v.ok) v.detail = "100 sets x 5 permutations x 4 configurations";
  return v;
}

Verdict distance_oracle() {
  Verdict v;
  Rng rng(3003);
  std::size_t pairs = 0;
  for (int round = 0; round < 50; ++round) {
    const auto g = testing::random_dag(rng, 12);
    for (const auto& a : g.nodes) {
      for (const auto& b : g.nodes) {
        ++pairs;
        if (hop_distance(g, a, b) != testing::enumerate_shortest_path(g, a, b)) {
          v.fail("DAG " + std::to_string(round) + ": " + a.label + " -> " + b.label);
        }
      }
    }
  }
  if (v.ok) v.detail = "50 DAGs, " + std::to_string(pairs) + " pairs";
  return v;
}

Verdict depth_cap() {
  Verdict v;
  Rng rng(4004);
  std::size_t graphs = 0;
  for (int round = 0; round < 100; ++round) {
    const int nodes = testing::uniform(rng, 4, 16);
    const auto edges = testing::random_edges(rng, nodes, testing::uniform(rng, nodes, nodes * 3), true, true);
    const auto t = Taxonomy::from_relations(edges, testing::random_lexicon(rng, nodes, 5));
    if (!validate_taxonomy(t).cycle_detected) v.fail("digraph " + std::to_string(round) + " has no cycle");
    for (int depth = 1; depth <= 6; ++depth) {
      const WeightProfile profile{WeightKind::kSpecificHeavy, depth};
      for (int s = 0; s < 5; ++s) {
        const auto m = testing::match_for(t, "w" + std::to_string(s));
        if (m.concepts.empty()) continue;
        const auto g = build_entity_graph(t, m, profile);
        ++graphs;
        for (const auto& [key, rel] : g.edges) {
          if (rel.level < 1 || rel.level > depth) {
            v.fail("digraph " + std::to_string(round) + " D=" + std::to_string(depth) + ": level " +
                   std::to_string(rel.level));
          }
        }
      }
    }
  }
  if (v.ok) v.detail = "100 cyclic digraphs, " + std::to_string(graphs) + " entity graphs";
  return v;
}

Verdict argmax_invariance() {
  Verdict v;
  Rng rng(5005);
  int round = 0;
  while (round < 100) {
    const auto graphs = testing::random_graph_set(rng);
    const auto g = fuse(std::span<const EntityGraph>(graphs), FusionConfig{});
    if (g.edges.empty()) continue;
    const SelectionConfig cfg;
    const auto before = select_themes(g, cfg);
    auto scaled = g;
    const Weight factor = testing::random_positive_rational(rng);
    for (auto& [key, rel] : scaled.edges) rel.weight *= factor;
    const auto after = select_themes(scaled, cfg);
    bool same = before.size() == after.size();
    for (std::size_t i = 0; same && i < before.size(); ++i) {
      same = before[i].node == after[i].node && before[i].depth == after[i].depth &&
             before[i].flow * factor == after[i].flow;
    }
    if (!same) v.fail("instance " + std::to_string(round) + " scaled by " + to_string(factor));
    ++round;
  }
  if (v.ok) v.detail = "100 instances";
  return v;
}

Verdict metrics() {
  Verdict v;
  Rng rng(6006);
  for (int round = 0; round < 1000; ++round) {
    std::set<std::string> p, g;
    for (int i = testing::uniform(rng, 0, 6); i > 0; --i) p.insert("l" + std::to_string(testing::uniform(rng, 0, 9)));
    for (int i = testing::uniform(rng, 0, 6); i > 0; --i) g.insert("l" + std::to_string(testing::uniform(rng, 0, 9)));
    const auto m = compare_labels(p, g);
    const auto swapped = compare_labels(g, p);
    if (m.precision() != swapped.recall() || m.recall() != swapped.precision()) v.fail("swap asymmetry");
  }
  const GoldIndex gold{"d", {"Graphes", "Arbres"}, {"sommet", "arête"}};
  ExtractionResult same;
  same.doc = "d";
  for (const auto& t : gold.themes) same.themes.push_back({c(t), 1, 0});
  for (const auto& k : gold.keywords) same.keywords.push_back({e(k), 1, c("Graphes")});
  const auto identity = score(same, gold);
  for (const auto& ratio : {identity.themes.precision(), identity.themes.recall(), identity.keywords.precision(),
                            identity.keywords.recall()}) {
    if (ratio != Weight(1)) v.fail("identity is not 1");
  }
  const auto pair = compare_labels({"a", "b"}, {"b", "c"});
  if (pair.precision() != Weight(1, 2) || pair.recall() != Weight(1, 2)) v.fail("2x2 example is not 1/2");
  if (v.ok) v.detail = "1000 swaps, identity 1, 2x2 example 1/2";
  return v;
}

}  // namespace
}  // namespace themegraph

int main() {
  using namespace themegraph;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"worked example (Souris/Clavier)", worked_example},
      {"synthetic corpus recall and precision", synthetic_corpus},
      {"fusion conservation", fusion_conservation},
      {"fusion order independence", fusion_order_independence},
      {"hop distance oracle", distance_oracle},
      {"depth cap and termination", depth_cap},
      {"argmax invariance under scaling", argmax_invariance},
      {"metrics swap symmetry and examples", metrics},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& ex) {
      v.fail(std::string("exception: ") + ex.what());
    }
    if (!v.ok) ++failures;
    std::cout << (v.ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << ": " << v.detail << "\n";
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
