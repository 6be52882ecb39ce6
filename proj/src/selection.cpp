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

#include "themegraph/selection.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "themegraph/error.hpp"

namespace themegraph {
namespace {

// Dense adjacency over a ConsolidatedGraph; node ids follow Node order.
struct Adjacency {
  std::vector<const Node*> nodes;
  std::map<Node, int> id;
  std::vector<std::vector<int>> out;
  std::vector<int> in_degree;

  explicit Adjacency(const ConsolidatedGraph& g) {
    nodes.reserve(g.nodes.size());
    for (const auto& n : g.nodes) {
      id.emplace(n, static_cast<int>(nodes.size()));
      nodes.push_back(&n);
    }
    out.resize(nodes.size());
    in_degree.assign(nodes.size(), 0);
    for (const auto& [key, _] : g.edges) {
      int from = at(key.first);
      int to = at(key.second);
      out[from].push_back(to);
      ++in_degree[to];
    }
  }

  int at(const Node& n) const {
    auto it = id.find(n);
    if (it == id.end()) {
      throw ParameterError(std::string("unknown ") + to_string(n.kind) + " node '" + n.label + "'");
    }
    return it->second;
  }

  std::vector<int> distances_from(int source) const {
    std::vector<int> dist(nodes.size(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : out[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return dist;
  }
};

// Iterative Tarjan. Components come out sinks first.
std::vector<int> strongly_connected(const Adjacency& a, int& count) {
  const int n = static_cast<int>(a.nodes.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;
  int next_index = 0;
  count = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [u, next] = call.back();
      if (next < a.out[u].size()) {
        int v = a.out[u][next++];
        if (index[v] < 0) {
          index[v] = low[v] = next_index++;
          stack.push_back(v);
          on_stack[v] = true;
          call.emplace_back(v, 0);
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      const int done = u;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return comp;
}

std::vector<int> depths(const Adjacency& a) {
  int count = 0;
  auto comp = strongly_connected(a, count);
  std::vector<std::vector<int>> members(count);
  for (int u = 0; u < static_cast<int>(comp.size()); ++u) members[comp[u]].push_back(u);
  std::vector<int> comp_depth(count, 0);
  for (int c = count - 1; c >= 0; --c) {
    for (int u : members[c]) {
      for (int v : a.out[u]) {
        if (comp[v] != c) comp_depth[comp[v]] = std::max(comp_depth[comp[v]], comp_depth[c] + 1);
      }
    }
  }
  std::vector<int> out(comp.size());
  for (std::size_t u = 0; u < comp.size(); ++u) out[u] = comp_depth[comp[u]];
  return out;
}

std::vector<Weight> flows(const ConsolidatedGraph& g, const Adjacency& a) {
  std::vector<Weight> flow(a.nodes.size(), Weight(0));
  for (const auto& [key, rel] : g.edges) flow[a.at(key.first)] += rel.weight;
  return flow;
}

}  // namespace

const char* to_string(KeywordMode mode) {
  return mode == KeywordMode::kMaxDistance ? "max_distance" : "ranked_leaves";
}

KeywordMode parse_keyword_mode(std::string_view name) {
  if (name == "max_distance") return KeywordMode::kMaxDistance;
  if (name == "ranked_leaves") return KeywordMode::kRankedLeaves;
  throw ParameterError("unknown keyword mode '" + std::string(name) + "'");
}

void SelectionConfig::check() const {
  if (max_themes < 1) throw ParameterError("max_themes must be >= 1");
  if (distance_tolerance < 0) {
    throw ParameterError("distance_tolerance must be >= 0, got " +
                         std::to_string(distance_tolerance));
  }
}

std::vector<Keyword> ExtractionResult::keywords_for(const Node& theme) const {
  std::vector<Keyword> out;
  for (const auto& k : keywords) {
    if (k.theme == theme) out.push_back(k);
  }
  return out;
}

Weight out_flow(const ConsolidatedGraph& g, const Node& node) {
  if (!g.contains(node)) {
    throw ParameterError(std::string("unknown ") + to_string(node.kind) + " node '" + node.label + "'");
  }
  Weight sum = 0;
  for (auto it = g.edges.lower_bound(EdgeKey{node, Node{}}); it != g.edges.end(); ++it) {
    if (it->first.first != node) break;
    sum += it->second.weight;
  }
  return sum;
}

std::optional<int> hop_distance(const ConsolidatedGraph& g, const Node& from, const Node& to) {
  Adjacency a(g);
  const int source = a.at(from);
  const int target = a.at(to);
  int d = a.distances_from(source)[target];
  if (d < 0) return std::nullopt;
  return d;
}

std::map<Node, int> node_depths(const ConsolidatedGraph& g) {
  Adjacency a(g);
  auto d = depths(a);
  std::map<Node, int> out;
  for (std::size_t u = 0; u < d.size(); ++u) out.emplace(*a.nodes[u], d[u]);
  return out;
}

std::vector<Theme> select_themes(const ConsolidatedGraph& g, const SelectionConfig& cfg) {
  cfg.check();
  if (g.nodes.empty()) throw ParameterError("cannot select themes from an empty graph");
  Adjacency a(g);
  const auto flow = flows(g, a);
  const auto depth = depths(a);

  Weight best = 0;
  for (const auto& f : flow) best = std::max(best, f);
  if (best <= 0) return {};

  int deepest = std::numeric_limits<int>::min();
  for (std::size_t u = 0; u < flow.size(); ++u) {
    if (flow[u] == best) deepest = std::max(deepest, depth[u]);
  }
  // Node ids follow Node order, so ascending u is ascending id.
  std::vector<Theme> themes;
  for (std::size_t u = 0; u < flow.size() && themes.size() < cfg.max_themes; ++u) {
    if (flow[u] == best && depth[u] == deepest) themes.push_back({*a.nodes[u], flow[u], depth[u]});
  }
  return themes;
}

std::vector<Keyword> extract_keywords(const ConsolidatedGraph& g, const std::vector<Theme>& themes,
                                      const SelectionConfig& cfg) {
  cfg.check();
  Adjacency a(g);
  std::vector<bool> is_theme(a.nodes.size(), false);
  for (const auto& t : themes) is_theme[a.at(t.node)] = true;

  std::vector<Keyword> out;
  for (const auto& theme : themes) {
    const int source = a.at(theme.node);
    const auto dist = a.distances_from(source);
    const int farthest = *std::max_element(dist.begin(), dist.end());
    if (farthest < 1) continue;

    std::vector<std::pair<int, int>> picked;  // (distance, node id)
    for (int u = 0; u < static_cast<int>(dist.size()); ++u) {
      if (dist[u] < 1 || is_theme[u]) continue;
      bool take = cfg.keyword_mode == KeywordMode::kMaxDistance
                      ? dist[u] >= farthest - cfg.distance_tolerance
                      : a.out[u].empty();
      if (take) picked.emplace_back(dist[u], u);
    }
    std::sort(picked.begin(), picked.end(), [](const auto& x, const auto& y) {
      return x.first != y.first ? x.first > y.first : x.second < y.second;
    });
    for (const auto& [d, u] : picked) out.push_back({*a.nodes[u], d, theme.node});
  }
  return out;
}

ExtractionResult select(const ConsolidatedGraph& g, const SelectionConfig& cfg) {
  ExtractionResult r;
  r.themes = select_themes(g, cfg);
  r.keywords = extract_keywords(g, r.themes, cfg);
  r.ignored_word_graphs = g.ignored_word_graphs;
  return r;
}

}  // namespace themegraph
