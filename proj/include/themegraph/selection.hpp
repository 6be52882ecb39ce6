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
#include <optional>
#include <string>
#include <vector>

#include "themegraph/fusion.hpp"
#include "themegraph/graph.hpp"

namespace themegraph {

enum class KeywordMode {
  kMaxDistance,   // nodes within `distance_tolerance` hops of the farthest one
  kRankedLeaves,  // every reachable sink, farthest first
};

const char* to_string(KeywordMode mode);
KeywordMode parse_keyword_mode(std::string_view name);

struct SelectionConfig {
  std::size_t max_themes = 6;
  int distance_tolerance = 0;
  KeywordMode keyword_mode = KeywordMode::kMaxDistance;

  void check() const;
};

struct Theme {
  Node node;
  Weight flow;
  int depth = 0;

  friend bool operator==(const Theme&, const Theme&) = default;
};

struct Keyword {
  Node node;
  int distance = 0;
  Node theme;

  friend bool operator==(const Keyword&, const Keyword&) = default;
};

struct ExtractionResult {
  std::string doc;
  std::vector<Theme> themes;
  std::vector<Keyword> keywords;  // grouped by theme, in theme order
  std::size_t ignored_word_graphs = 0;

  std::vector<Keyword> keywords_for(const Node& theme) const;

  friend bool operator==(const ExtractionResult&, const ExtractionResult&) = default;
};

/// Sum of outgoing edge weights; 0 for sinks. Throws ParameterError for a
/// node outside the graph.
Weight out_flow(const ConsolidatedGraph& g, const Node& node);

/// Fewest directed hops from `from` to `to`, ignoring weights; nullopt when
/// unreachable. Throws ParameterError for a node outside the graph.
std::optional<int> hop_distance(const ConsolidatedGraph& g, const Node& from, const Node& to);

/// Longest hop path reaching each node from an in-degree-0 node, measured on
/// the condensation of the graph's strongly connected components.
std::map<Node, int> node_depths(const ConsolidatedGraph& g);

/// Nodes of maximal out-flow; of those, only the deepest are kept, in
/// ascending id order, truncated to `max_themes`. Sinks never qualify, so a
/// graph without edges gives no themes. Throws ParameterError on an empty
/// graph.
std::vector<Theme> select_themes(const ConsolidatedGraph& g, const SelectionConfig& cfg);

/// Per-theme keywords, farthest first then by id. Selected themes are never
/// keywords.
std::vector<Keyword> extract_keywords(const ConsolidatedGraph& g, const std::vector<Theme>& themes,
                                      const SelectionConfig& cfg);

/// select_themes followed by extract_keywords.
ExtractionResult select(const ConsolidatedGraph& g, const SelectionConfig& cfg);

}  // namespace themegraph
