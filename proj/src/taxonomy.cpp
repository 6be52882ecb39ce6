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

#include "themegraph/taxonomy.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>

#include "themegraph/error.hpp"
#include "themegraph/unicode.hpp"

namespace themegraph {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

void check_concept_id(const std::string& id) {
  if (id.empty()) throw ParameterError("empty concept id");
  if (id.find_first_of("\t\n\r") != std::string::npos) {
    throw ParameterError("concept id contains a tab or line break: '" + id + "'");
  }
}

std::vector<Relation> read_pairs(std::istream& in, std::string_view what) {
  std::vector<Relation> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (view.empty() || view.front() == '#') continue;
    if (trim(view).empty()) continue;
    auto tab = view.find('\t');
    if (tab == std::string_view::npos || view.find('\t', tab + 1) != std::string_view::npos) {
      throw ParseError(std::string(what) + ": expected exactly 2 tab-separated fields", line_no);
    }
    auto first = trim(view.substr(0, tab));
    auto second = trim(view.substr(tab + 1));
    if (first.empty() || second.empty()) {
      throw ParseError(std::string(what) + ": empty field", line_no);
    }
    out.emplace_back(std::string(first), std::string(second));
  }
  return out;
}

}  // namespace

std::string normalize_surface(std::string_view surface) {
  std::string out;
  out.reserve(surface.size());
  bool pending_gap = false;
  for (char32_t cp : unicode::decode(surface)) {
    if (unicode::is_space(cp) || cp == U'_') {
      pending_gap = !out.empty();
      continue;
    }
    if (pending_gap) {
      out.push_back('_');
      pending_gap = false;
    }
    unicode::append(out, unicode::to_lower(cp));
  }
  return out;
}

Taxonomy::Index Taxonomy::intern(const std::string& id) {
  auto [it, inserted] = index_.try_emplace(id, static_cast<Index>(names_.size()));
  if (inserted) {
    names_.push_back(id);
    parents_.emplace_back();
    children_.emplace_back();
  }
  return it->second;
}

Taxonomy Taxonomy::from_relations(std::span<const Relation> edges,
                                  std::span<const Relation> lexicon) {
  Taxonomy t;
  std::set<std::pair<Index, Index>> seen;
  for (const auto& [parent, child] : edges) {
    check_concept_id(parent);
    check_concept_id(child);
    if (parent == child) {
      ++t.self_loops_;
      continue;
    }
    Index p = t.intern(parent);
    Index c = t.intern(child);
    if (!seen.emplace(p, c).second) {
      ++t.duplicate_edges_;
      continue;
    }
    t.parents_[c].push_back(p);
    t.children_[p].push_back(c);
  }
  t.edge_count_ = seen.size();
  if (t.edge_count_ == 0) throw ParseError("empty taxonomy", 0);
  t.node_count_ = t.names_.size();

  for (const auto& [surface, id] : lexicon) {
    check_concept_id(id);
    std::string key = normalize_surface(surface);
    if (key.empty()) throw ParameterError("empty surface form for concept '" + id + "'");
    t.lexicon_[key].push_back(t.intern(id));
  }

  auto by_name = [&t](Index a, Index b) { return t.names_[a] < t.names_[b]; };
  auto sort_unique = [&](std::vector<Index>& v) {
    std::sort(v.begin(), v.end(), by_name);
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  for (auto& v : t.parents_) sort_unique(v);
  for (auto& v : t.children_) sort_unique(v);
  for (auto& [key, v] : t.lexicon_) {
    sort_unique(v);
    t.lexicon_entries_ += v.size();
  }
  return t;
}

std::optional<Taxonomy::Index> Taxonomy::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const Taxonomy::Index> Taxonomy::lookup_normalized(std::string_view key) const {
  auto it = lexicon_.find(std::string(key));
  if (it == lexicon_.end()) return {};
  return it->second;
}

std::span<const Taxonomy::Index> Taxonomy::lookup(std::string_view surface) const {
  return lookup_normalized(normalize_surface(surface));
}

std::vector<std::string> Taxonomy::surfaces() const {
  std::vector<std::string> out;
  out.reserve(lexicon_.size());
  for (const auto& [key, _] : lexicon_) out.push_back(key);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Relation> Taxonomy::edges() const {
  std::vector<Relation> out;
  out.reserve(edge_count_);
  for (Index p = 0; p < names_.size(); ++p) {
    for (Index c : children_[p]) out.emplace_back(names_[p], names_[c]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Taxonomy load_taxonomy(std::istream& edges_source, std::istream& lexicon_source) {
  auto edges = read_pairs(edges_source, "edges");
  auto lexicon = read_pairs(lexicon_source, "lexicon");
  return Taxonomy::from_relations(edges, lexicon);
}

Taxonomy load_taxonomy(const std::filesystem::path& edges_path,
                       const std::filesystem::path& lexicon_path) {
  std::ifstream edges(edges_path);
  if (!edges) throw Error("cannot open edges file: " + edges_path.string());
  std::ifstream lexicon(lexicon_path);
  if (!lexicon) throw Error("cannot open lexicon file: " + lexicon_path.string());
  return load_taxonomy(edges, lexicon);
}

ValidationReport validate_taxonomy(const Taxonomy& t) {
  ValidationReport r;
  r.self_loop_count = t.self_loops_dropped();
  r.duplicate_edge_count = t.duplicate_edges_dropped();
  r.node_count = t.node_count();
  r.edge_count = t.edge_count();

  const auto n = static_cast<Taxonomy::Index>(t.concept_count());
  for (const auto& key : t.surfaces()) {
    for (auto c : t.lookup_normalized(key)) {
      if (t.parents(c).empty() && t.children(c).empty()) ++r.orphan_lexicon_entries;
    }
  }

  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<std::uint8_t> color(n, 0);
  std::vector<std::pair<Taxonomy::Index, std::size_t>> stack;
  for (Taxonomy::Index root = 0; root < n && !r.cycle_detected; ++root) {
    if (color[root] != 0) continue;
    stack.emplace_back(root, 0);
    color[root] = 1;
    while (!stack.empty() && !r.cycle_detected) {
      auto& [node, next] = stack.back();
      auto kids = t.children(node);
      if (next == kids.size()) {
        color[node] = 2;
        stack.pop_back();
        continue;
      }
      auto child = kids[next++];
      if (color[child] == 1) {
        r.cycle_detected = true;
      } else if (color[child] == 0) {
        color[child] = 1;
        stack.emplace_back(child, 0);
      }
    }
    stack.clear();
  }
  return r;
}

}  // namespace themegraph
