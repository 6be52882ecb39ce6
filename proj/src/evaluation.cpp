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

#include "themegraph/evaluation.hpp"

#include "themegraph/error.hpp"
#include "themegraph/taxonomy.hpp"

namespace themegraph {
namespace {

std::optional<Weight> ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return Weight(static_cast<long long>(num), static_cast<long long>(den));
}

std::set<std::string> normalized(const std::set<std::string>& labels, const ScoreOptions& opts) {
  std::set<std::string> out;
  for (const auto& l : labels) {
    auto n = normalize_label(l, opts);
    if (!n.empty()) out.insert(std::move(n));
  }
  return out;
}

}  // namespace

std::optional<Weight> CategoryMetrics::precision() const {
  return ratio(counts.tp, counts.tp + counts.fp);
}

std::optional<Weight> CategoryMetrics::recall() const {
  return ratio(counts.tp, counts.tp + counts.fn);
}

std::string normalize_label(std::string_view label, const ScoreOptions& opts) {
  std::string out = normalize_surface(label);
  if (opts.plural_folding && out.size() > 1 && out.back() == 's') out.pop_back();
  return out;
}

CategoryMetrics compare_labels(const std::set<std::string>& predicted,
                               const std::set<std::string>& gold, const ScoreOptions& opts) {
  const auto p = normalized(predicted, opts);
  const auto g = normalized(gold, opts);
  CategoryMetrics m;
  for (const auto& label : p) {
    if (g.count(label)) {
      ++m.counts.tp;
    } else {
      ++m.counts.fp;
    }
  }
  m.counts.fn = g.size() - m.counts.tp;
  return m;
}

Metrics score(const ExtractionResult& predicted, const GoldIndex& gold, const ScoreOptions& opts) {
  std::set<std::string> themes;
  for (const auto& t : predicted.themes) themes.insert(t.node.label);
  std::set<std::string> keywords;
  for (const auto& k : predicted.keywords) keywords.insert(k.node.label);
  return {compare_labels(themes, gold.themes, opts), compare_labels(keywords, gold.keywords, opts)};
}

Metrics aggregate(std::span<const Metrics> per_doc) {
  if (per_doc.empty()) throw ParameterError("aggregate needs at least one document");
  Metrics total;
  for (const auto& m : per_doc) {
    total.themes.counts += m.themes.counts;
    total.keywords.counts += m.keywords.counts;
  }
  return total;
}

}  // namespace themegraph
