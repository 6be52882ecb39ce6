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

#include "themegraph/json_io.hpp"

#include "themegraph/error.hpp"

namespace themegraph {
namespace {

using nlohmann::json;

// Integers stay integers; anything else is the nearest double.
json number(const Weight& w) {
  if (boost::multiprecision::denominator(w) == 1) {
    const auto num = boost::multiprecision::numerator(w);
    if (num <= std::numeric_limits<long long>::max() && num >= std::numeric_limits<long long>::min()) {
      return num.convert_to<long long>();
    }
  }
  return to_double(w);
}

json ratio(const std::optional<Weight>& r) {
  if (!r) return nullptr;
  return to_double(*r);
}

NodeKind kind_from(const json& j) {
  if (!j.contains("kind")) return NodeKind::kConcept;
  const auto k = j.at("kind").get<std::string>();
  if (k == "entity") return NodeKind::kEntity;
  if (k == "concept") return NodeKind::kConcept;
  throw ParseError("unknown node kind '" + k + "'", 0);
}

std::set<std::string> string_set(const json& j, const char* field) {
  std::set<std::string> out;
  if (!j.contains(field)) return out;
  const auto& arr = j.at(field);
  if (!arr.is_array()) throw ParseError(std::string("'") + field + "' must be an array", 0);
  for (const auto& v : arr) out.insert(v.get<std::string>());
  return out;
}

}  // namespace

json to_json(const ConsolidatedGraph& g) {
  json nodes = json::array();
  for (const auto& n : g.nodes) {
    json entry{{"label", n.label}, {"kind", to_string(n.kind)}};
    auto it = g.contributors.find(n);
    entry["contributors"] = it == g.contributors.end() ? json::array() : json(it->second);
    nodes.push_back(std::move(entry));
  }
  json edges = json::array();
  for (const auto& [key, rel] : g.edges) {
    edges.push_back({{"from", key.first.label},
                     {"from_kind", to_string(key.first.kind)},
                     {"to", key.second.label},
                     {"to_kind", to_string(key.second.kind)},
                     {"weight", to_string(rel.weight)},
                     {"support", rel.support},
                     {"min_level", rel.min_level}});
  }
  return {{"nodes", std::move(nodes)},
          {"edges", std::move(edges)},
          {"fused_graphs", g.fused_graphs},
          {"ignored_word_graphs", g.ignored_word_graphs}};
}

json to_json(const ExtractionResult& r) {
  json themes = json::array();
  for (const auto& t : r.themes) {
    json keywords = json::array();
    for (const auto& k : r.keywords_for(t.node)) {
      keywords.push_back(
          {{"node", k.node.label}, {"kind", to_string(k.node.kind)}, {"distance", k.distance}});
    }
    themes.push_back({{"node", t.node.label},
                      {"kind", to_string(t.node.kind)},
                      {"flow", number(t.flow)},
                      {"flow_exact", to_string(t.flow)},
                      {"depth", t.depth},
                      {"keywords", std::move(keywords)}});
  }
  return {{"doc", r.doc}, {"themes", std::move(themes)}, {"ignored_word_graphs", r.ignored_word_graphs}};
}

ExtractionResult extraction_result_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("extraction result must be a JSON object", 0);
  ExtractionResult r;
  try {
    r.doc = j.value("doc", std::string());
    r.ignored_word_graphs = j.value("ignored_word_graphs", std::size_t{0});
    for (const auto& t : j.value("themes", json::array())) {
      Theme theme{{t.at("node").get<std::string>(), kind_from(t)}, Weight(0), t.value("depth", 0)};
      if (t.contains("flow_exact")) {
        theme.flow = parse_rational(t.at("flow_exact").get<std::string>());
      } else if (t.contains("flow") && t.at("flow").is_number_integer()) {
        theme.flow = Weight(t.at("flow").get<long long>());
      }
      for (const auto& k : t.value("keywords", json::array())) {
        r.keywords.push_back({{k.at("node").get<std::string>(), kind_from(k)},
                              k.value("distance", 0), theme.node});
      }
      r.themes.push_back(std::move(theme));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed extraction result: ") + e.what(), 0);
  }
  return r;
}

json to_json(const ValidationReport& r) {
  return {{"self_loop_count", r.self_loop_count},
          {"duplicate_edge_count", r.duplicate_edge_count},
          {"cycle_detected", r.cycle_detected},
          {"orphan_lexicon_entries", r.orphan_lexicon_entries},
          {"node_count", r.node_count},
          {"edge_count", r.edge_count}};
}

json to_json(const CategoryMetrics& m) {
  return {{"precision", ratio(m.precision())},
          {"recall", ratio(m.recall())},
          {"tp", m.counts.tp},
          {"fp", m.counts.fp},
          {"fn", m.counts.fn}};
}

json to_json(const Metrics& m) {
  return {{"themes", to_json(m.themes)}, {"keywords", to_json(m.keywords)}};
}

std::vector<GoldIndex> gold_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("gold file must hold a JSON array", 0);
  std::vector<GoldIndex> out;
  try {
    for (const auto& entry : j) {
      GoldIndex g;
      g.doc_id = entry.at("doc_id").get<std::string>();
      if (g.doc_id.empty()) throw ParseError("gold entry with empty doc_id", 0);
      g.themes = string_set(entry, "themes");
      g.keywords = string_set(entry, "keywords");
      out.push_back(std::move(g));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed gold entry: ") + e.what(), 0);
  }
  return out;
}

}  // namespace themegraph
