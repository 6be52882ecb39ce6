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

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "themegraph/rational.hpp"

namespace themegraph {

enum class NodeKind { kConcept, kEntity };

/// A graph vertex: a taxonomy concept or a matched document entity. The two
/// kinds live in separate namespaces, so the concept "Souris" and the entity
/// "souris" are distinct nodes. Ordering is by label first.
struct Node {
  std::string label;
  NodeKind kind = NodeKind::kConcept;

  static Node concept_node(std::string label) { return {std::move(label), NodeKind::kConcept}; }
  static Node entity(std::string label) { return {std::move(label), NodeKind::kEntity}; }

  bool is_entity() const noexcept { return kind == NodeKind::kEntity; }

  friend auto operator<=>(const Node&, const Node&) = default;
};

/// Directed edge, parent (generic) -> child (specific).
using EdgeKey = std::pair<Node, Node>;

const char* to_string(NodeKind kind);

}  // namespace themegraph
