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

#include "themegraph/entity_graph.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "themegraph/error.hpp"

namespace themegraph {

const char* to_string(NodeKind kind) {
  return kind == NodeKind::kEntity ? "entity" : "concept";
}

const char* to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::kSpecificHeavy: return "specific_heavy";
    case WeightKind::kGenericHeavy: return "generic_heavy";
    case WeightKind::kConstant: return "constant";
  }
  return "?";
}

WeightKind parse_weight_kind(std::string_view name) {
  if (name == "specific_heavy") return WeightKind::kSpecificHeavy;
  if (name == "generic_heavy") return WeightKind::kGenericHeavy;
  if (name == "constant") return WeightKind::kConstant;
  throw ParameterError("unknown weight profile '" + std::string(name) + "'");
}

void WeightProfile::check() const {
  if (depth_cap < 1) {
    throw ParameterError("depth must be >= 1, got " + std::to_string(depth_cap));
  }
}

Weight WeightProfile::weight(int level) const {
  check();
  if (level < 1 || level > depth_cap) {
    throw ParameterError("level " + std::to_string(level) + " outside 1.." +
                         std::to_string(depth_cap));
  }
  switch (kind) {
    case WeightKind::kSpecificHeavy: return Weight(depth_cap - level + 1);
    case WeightKind::kGenericHeavy: return Weight(level);
    case WeightKind::kConstant: return Weight(1);
  }
  return Weight(1);
}

Weight EntityGraph::total_weight() const {
  Weight sum = 0;
  for (const auto& [_, rel] : edges) sum += rel.weight;
  return sum;
}

int EntityGraph::max_level() const {
  int level = 0;
  for (const auto& [_, rel] : edges) level = std::max(level, rel.level);
  return level;
}

EntityGraph build_entity_graph(const Taxonomy& t, const EntityMatch& m, const WeightProfile& p) {
  p.check();
  if (m.concepts.empty()) throw ParameterError("entity '" + m.surface + "' has no concepts");

  EntityGraph g;
  g.leaf = Node::entity(m.surface);
  g.profile = p;
  g.nodes.insert(g.leaf);

  std::vector<Weight> weight_of(static_cast<std::size_t>(p.depth_cap) + 1);
  for (int level = 1; level <= p.depth_cap; ++level) weight_of[level] = p.weight(level);

  using Index = Taxonomy::Index;
  std::unordered_map<Index, int> dist;
  std::unordered_map<Index, std::vector<Index>> below;  // edges already placed, parent -> child

  auto add_edge = [&](Node from, const Node& to, int level) {
    g.nodes.insert(from);
    g.edges.emplace(EdgeKey{std::move(from), to}, EntityRelation{weight_of[level], level});
  };

  // Would an edge parent -> child close a cycle, i.e. does child already reach parent?
  std::vector<Index> stack;
  std::unordered_set<Index> seen;
  auto reaches = [&](Index from, Index target) {
    stack.assign(1, from);
    seen.clear();
    seen.insert(from);
    while (!stack.empty()) {
      Index n = stack.back();
      stack.pop_back();
      if (n == target) return true;
      auto it = below.find(n);
      if (it == below.end()) continue;
      for (Index c : it->second) {
        if (seen.insert(c).second) stack.push_back(c);
      }
    }
    return false;
  };

  std::vector<Index> frontier;
  for (const auto& id : m.concepts) {
    add_edge(Node::concept_node(id), g.leaf, 1);
    if (auto idx = t.find(id); idx && dist.emplace(*idx, 1).second) frontier.push_back(*idx);
  }

  for (int level = 1; level < p.depth_cap && !frontier.empty(); ++level) {
    std::sort(frontier.begin(), frontier.end(),
              [&t](Index a, Index b) { return t.name(a) < t.name(b); });
    std::vector<Index> next;
    for (Index child : frontier) {
      const Node child_node = Node::concept_node(t.name(child));
      for (Index parent : t.parents(child)) {
        auto [it, fresh] = dist.emplace(parent, level + 1);
        if (!fresh && reaches(child, parent)) continue;
        if (fresh) next.push_back(parent);
        below[parent].push_back(child);
        add_edge(Node::concept_node(t.name(parent)), child_node, level + 1);
      }
    }
    frontier = std::move(next);
  }
  return g;
}

}  // namespace themegraph
