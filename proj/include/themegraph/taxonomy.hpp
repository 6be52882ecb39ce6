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
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace themegraph {

/// Wikipedia-style concept label, case preserved, underscores for spaces.
using ConceptId = std::string;

using Relation = std::pair<std::string, std::string>;

/// Lexicon key form: lowercase, whitespace runs collapsed to one underscore,
/// surrounding whitespace trimmed.
std::string normalize_surface(std::string_view surface);

struct ValidationReport {
  std::size_t self_loop_count = 0;
  std::size_t duplicate_edge_count = 0;
  bool cycle_detected = false;
  std::size_t orphan_lexicon_entries = 0;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Immutable concept hierarchy (parent -> child edges) plus the surface-form
/// lexicon. Concepts are interned; adjacency lists are sorted by label so
/// traversal order does not depend on input line order.
class Taxonomy {
 public:
  using Index = std::uint32_t;

  /// Builds from in-memory relations. Self-loops are dropped and duplicate
  /// edges collapsed (both counted). Throws ParseError("empty taxonomy")
  /// when no edge survives, ParameterError on an invalid concept id or an
  /// empty surface form.
  static Taxonomy from_relations(std::span<const Relation> edges,
                                 std::span<const Relation> lexicon);

  std::size_t edge_count() const noexcept { return edge_count_; }
  /// Concepts that are endpoints of at least one edge.
  std::size_t node_count() const noexcept { return node_count_; }
  /// All interned concepts, isolated lexicon targets included.
  std::size_t concept_count() const noexcept { return names_.size(); }
  std::size_t lexicon_size() const noexcept { return lexicon_.size(); }
  std::size_t lexicon_entry_count() const noexcept { return lexicon_entries_; }

  std::size_t self_loops_dropped() const noexcept { return self_loops_; }
  std::size_t duplicate_edges_dropped() const noexcept { return duplicate_edges_; }

  std::optional<Index> find(std::string_view id) const;
  const ConceptId& name(Index i) const { return names_.at(i); }
  std::span<const Index> parents(Index i) const { return parents_.at(i); }
  std::span<const Index> children(Index i) const { return children_.at(i); }

  /// Concepts attached to an already-normalized surface form; empty if none.
  std::span<const Index> lookup_normalized(std::string_view key) const;
  /// Normalizes `surface` first.
  std::span<const Index> lookup(std::string_view surface) const;
  bool contains_surface(std::string_view key) const { return !lookup_normalized(key).empty(); }

  /// Lexicon keys, sorted.
  std::vector<std::string> surfaces() const;
  /// Stored edges as labels, sorted.
  std::vector<Relation> edges() const;

 private:
  Index intern(const std::string& id);

  std::vector<ConceptId> names_;
  std::unordered_map<std::string, Index> index_;
  std::vector<std::vector<Index>> parents_;
  std::vector<std::vector<Index>> children_;
  std::unordered_map<std::string, std::vector<Index>> lexicon_;
  std::size_t lexicon_entries_ = 0;
  std::size_t edge_count_ = 0;
  std::size_t node_count_ = 0;
  std::size_t self_loops_ = 0;
  std::size_t duplicate_edges_ = 0;
};

/// Reads `parent<TAB>child` edge lines and `surface<TAB>concept` lexicon
/// lines. Blank lines and lines starting with '#' are skipped. Throws
/// ParseError naming the line on a wrong field count.
Taxonomy load_taxonomy(std::istream& edges_source, std::istream& lexicon_source);
Taxonomy load_taxonomy(const std::filesystem::path& edges_path,
                       const std::filesystem::path& lexicon_path);

/// Read-only; cycle detection is a full iterative DFS.
ValidationReport validate_taxonomy(const Taxonomy& t);

}  // namespace themegraph
