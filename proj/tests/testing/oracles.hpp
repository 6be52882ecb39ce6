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

// Brute-force reference computations. None of them calls into the code
// paths they are compared against.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "themegraph/fusion.hpp"
#include "themegraph/graph.hpp"
#include "themegraph/taxonomy.hpp"
#include "themegraph/text.hpp"

namespace themegraph::testing {

/// Shortest simple path by enumerating every simple path from `from`.
inline std::optional<int> enumerate_shortest_path(const ConsolidatedGraph& g, const Node& from,
                                                  const Node& to) {
  std::optional<int> best;
  std::set<Node> on_path{from};
  std::function<void(const Node&, int)> walk = [&](const Node& u, int len) {
    if (u == to) {
      if (!best || len < *best) best = len;
      return;
    }
    for (const auto& [key, _] : g.edges) {
      if (key.first != u || on_path.count(key.second)) continue;
      on_path.insert(key.second);
      walk(key.second, len + 1);
      on_path.erase(key.second);
    }
  };
  walk(from, 0);
  return best;
}

/// Breadth-first hop distance by repeated full edge scans.
inline std::optional<int> scan_hop_distance(const ConsolidatedGraph& g, const Node& from, const Node& to) {
  std::map<Node, int> dist{{from, 0}};
  for (int round = 0;; ++round) {
    if (dist.count(to)) return dist.at(to);
    bool grew = false;
    for (const auto& [key, _] : g.edges) {
      auto it = dist.find(key.first);
      if (it != dist.end() && it->second == round && !dist.count(key.second)) {
        dist.emplace(key.second, round + 1);
        grew = true;
      }
    }
    if (!grew) return std::nullopt;
  }
}

/// Out-flow by scanning every edge.
inline Weight scan_out_flow(const ConsolidatedGraph& g, const Node& n) {
  Weight sum = 0;
  for (const auto& [key, rel] : g.edges) {
    if (key.first == n) sum += rel.weight;
  }
  return sum;
}

/// Every (start, length) window whose joined text is a lexicon key.
inline std::set<std::pair<std::size_t, std::size_t>> scan_windows(const std::vector<Token>& tokens,
                                                                   std::size_t n_max,
                                                                   const Taxonomy& t) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t start = 0; start < tokens.size(); ++start) {
    std::string key;
    for (std::size_t n = 1; n <= n_max && start + n <= tokens.size(); ++n) {
      if (n > 1) key += "_";
      key += tokens[start + n - 1].text;
      if (!t.lookup_normalized(key).empty()) out.emplace(start, n);
    }
  }
  return out;
}

}  // namespace themegraph::testing
