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

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>

#include "themegraph/entity_graph.hpp"
#include "themegraph/graph.hpp"

namespace themegraph {

/// How weights of a relation present in several graphs are combined.
struct Combiner {
  enum class Kind { kSum, kWeightedSum };
  Kind kind = Kind::kSum;
  Weight alpha = 1;  // weighted_sum only, in (0, 1]

  static Combiner sum() { return {}; }
  static Combiner weighted_sum(Weight alpha) { return {Kind::kWeightedSum, std::move(alpha)}; }
};

/// What happens to a relation found in only one of the fused graphs.
struct ExclusivePolicy {
  enum class Kind { kKeep, kAttenuate };
  Kind kind = Kind::kKeep;
  Weight factor = 1;  // attenuate only, in (0, 1)

  static ExclusivePolicy keep() { return {}; }
  static ExclusivePolicy attenuate(Weight factor) { return {Kind::kAttenuate, std::move(factor)}; }
};

struct FusionConfig {
  Combiner combiner;
  ExclusivePolicy exclusive;
  bool ngram_priority = true;

  /// Throws ParameterError when alpha or factor is out of range.
  void check() const;
};

std::string to_string(const Combiner& c);
std::string to_string(const ExclusivePolicy& p);

struct FusedRelation {
  Weight weight;
  std::size_t support = 0;  // number of input graphs holding the relation
  int min_level = 0;

  friend bool operator==(const FusedRelation&, const FusedRelation&) = default;
};

struct ConsolidatedGraph {
  std::set<Node> nodes;
  std::map<EdgeKey, FusedRelation> edges;
  /// Entity surfaces whose graphs introduced each node.
  std::map<Node, std::set<std::string>> contributors;
  std::size_t fused_graphs = 0;
  std::size_t ignored_word_graphs = 0;

  bool contains(const Node& n) const { return nodes.count(n) != 0; }
  Weight total_weight() const;
};

/// N-ary fusion. For each distinct relation with weights W across the
/// inputs: |W| >= 2 combines them (sum, or sum of alpha^i * w_i over W
/// sorted descending); |W| == 1 keeps the weight or scales it by the
/// attenuation factor. Exclusivity needs at least two inputs, so fusing a
/// single graph returns it unchanged. The result does not depend on input
/// order. Throws ParameterError on an empty input.
ConsolidatedGraph fuse(std::span<const EntityGraph> graphs, const FusionConfig& cfg);
ConsolidatedGraph fuse(std::span<const EntityGraph* const> graphs, const FusionConfig& cfg);

/// Multi-word graphs first: a single-word graph is admitted only if it
/// shares a node with the fused multi-word graphs, and ignored otherwise.
/// Admitted graphs are fused together with the multi-word graphs in one
/// n-ary fusion. With no multi-word graphs every word graph is admitted.
/// Throws ParameterError when both inputs are empty.
ConsolidatedGraph apply_ngram_priority(std::span<const EntityGraph> ngram_graphs,
                                       std::span<const EntityGraph> word_graphs,
                                       const FusionConfig& cfg);

}  // namespace themegraph
