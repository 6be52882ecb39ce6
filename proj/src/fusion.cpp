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

#include "themegraph/fusion.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "themegraph/error.hpp"

namespace themegraph {

void FusionConfig::check() const {
  if (combiner.kind == Combiner::Kind::kWeightedSum &&
      (combiner.alpha <= 0 || combiner.alpha > 1)) {
    throw ParameterError("alpha must lie in (0, 1], got " + themegraph::to_string(combiner.alpha));
  }
  if (exclusive.kind == ExclusivePolicy::Kind::kAttenuate &&
      (exclusive.factor <= 0 || exclusive.factor >= 1)) {
    throw ParameterError("attenuation factor must lie in (0, 1), got " +
                         themegraph::to_string(exclusive.factor));
  }
}

std::string to_string(const Combiner& c) {
  if (c.kind == Combiner::Kind::kSum) return "sum";
  return "weighted_sum(" + to_string(c.alpha) + ")";
}

std::string to_string(const ExclusivePolicy& p) {
  if (p.kind == ExclusivePolicy::Kind::kKeep) return "keep";
  return "attenuate(" + to_string(p.factor) + ")";
}

Weight ConsolidatedGraph::total_weight() const {
  Weight sum = 0;
  for (const auto& [_, rel] : edges) sum += rel.weight;
  return sum;
}

ConsolidatedGraph fuse(std::span<const EntityGraph* const> graphs, const FusionConfig& cfg) {
  cfg.check();
  if (graphs.empty()) throw ParameterError("fuse needs at least one graph");

  struct Pending {
    std::vector<Weight> weights;
    int min_level = 0;
  };
  std::map<EdgeKey, Pending> pending;
  ConsolidatedGraph out;
  out.fused_graphs = graphs.size();

  for (const EntityGraph* g : graphs) {
    for (const auto& n : g->nodes) {
      out.nodes.insert(n);
      out.contributors[n].insert(g->leaf.label);
    }
    for (const auto& [key, rel] : g->edges) {
      auto [it, fresh] = pending.try_emplace(key);
      it->second.weights.push_back(rel.weight);
      it->second.min_level = fresh ? rel.level : std::min(it->second.min_level, rel.level);
    }
  }

  const bool exclusivity = graphs.size() >= 2;
  for (auto& [key, p] : pending) {
    FusedRelation rel;
    rel.support = p.weights.size();
    rel.min_level = p.min_level;
    if (p.weights.size() == 1) {
      rel.weight = p.weights.front();
      if (exclusivity && cfg.exclusive.kind == ExclusivePolicy::Kind::kAttenuate) {
        rel.weight *= cfg.exclusive.factor;
      }
    } else if (cfg.combiner.kind == Combiner::Kind::kSum) {
      rel.weight = 0;
      for (const auto& w : p.weights) rel.weight += w;
    } else {
      std::sort(p.weights.begin(), p.weights.end(), std::greater<>());
      Weight scale = 1;
      rel.weight = 0;
      for (const auto& w : p.weights) {
        rel.weight += scale * w;
        scale *= cfg.combiner.alpha;
      }
    }
    out.edges.emplace(key, std::move(rel));
  }
  return out;
}

ConsolidatedGraph fuse(std::span<const EntityGraph> graphs, const FusionConfig& cfg) {
  std::vector<const EntityGraph*> refs;
  refs.reserve(graphs.size());
  for (const auto& g : graphs) refs.push_back(&g);
  return fuse(std::span<const EntityGraph* const>(refs), cfg);
}

ConsolidatedGraph apply_ngram_priority(std::span<const EntityGraph> ngram_graphs,
                                       std::span<const EntityGraph> word_graphs,
                                       const FusionConfig& cfg) {
  if (ngram_graphs.empty() && word_graphs.empty()) {
    throw ParameterError("apply_ngram_priority needs at least one graph");
  }
  if (ngram_graphs.empty()) return fuse(word_graphs, cfg);

  std::set<Node> base_nodes;
  std::vector<const EntityGraph*> admitted;
  for (const auto& g : ngram_graphs) {
    base_nodes.insert(g.nodes.begin(), g.nodes.end());
    admitted.push_back(&g);
  }
  std::size_t ignored = 0;
  for (const auto& g : word_graphs) {
    bool shares = std::any_of(g.nodes.begin(), g.nodes.end(),
                              [&](const Node& n) { return base_nodes.count(n) != 0; });
    if (shares) {
      admitted.push_back(&g);
    } else {
      ++ignored;
    }
  }
  auto out = fuse(std::span<const EntityGraph* const>(admitted), cfg);
  out.ignored_word_graphs = ignored;
  return out;
}

}  // namespace themegraph
