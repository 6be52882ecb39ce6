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

#pragma once

#include <map>
#include <set>

#include "themegraph/graph.hpp"
#include "themegraph/taxonomy.hpp"
#include "themegraph/text.hpp"

namespace themegraph {

enum class WeightKind {
  kSpecificHeavy,  // w(level) = D - level + 1
  kGenericHeavy,   // w(level) = level
  kConstant,       // w(level) = 1
};

struct WeightProfile {
  WeightKind kind = WeightKind::kSpecificHeavy;
  int depth_cap = 5;

  /// Throws ParameterError unless depth_cap >= 1 and 1 <= level <= depth_cap.
  Weight weight(int level) const;
  void check() const;
};

const char* to_string(WeightKind kind);
/// Accepts "specific_heavy", "generic_heavy", "constant".
WeightKind parse_weight_kind(std::string_view name);

struct EntityRelation {
  Weight weight;
  int level = 0;

  friend bool operator==(const EntityRelation&, const EntityRelation&) = default;
};

/// Weighted DAG rising from one entity leaf through at most `depth_cap`
/// levels of concepts. An edge's level is one more than the hop distance
/// from its child endpoint down to the leaf.
struct EntityGraph {
  Node leaf;
  WeightProfile profile;
  std::set<Node> nodes;
  std::map<EdgeKey, EntityRelation> edges;

  Weight total_weight() const;
  int max_level() const;
};

/// Breadth-first upward expansion from the match's concepts.
///
/// Level-1 edges join each matched concept to the leaf; taxonomy parents of
/// the level-k frontier give level k+1 edges, up to the depth cap. A node is
/// expanded once, at its minimum level. A parent edge that would close a
/// directed cycle is skipped, which keeps the result acyclic on cyclic
/// taxonomies. Concepts unknown to the taxonomy become parentless nodes.
EntityGraph build_entity_graph(const Taxonomy& t, const EntityMatch& m, const WeightProfile& p);

}  // namespace themegraph
