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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "themegraph/rational.hpp"
#include "themegraph/selection.hpp"

namespace themegraph {

/// Reference labels for one document.
struct GoldIndex {
  std::string doc_id;
  std::set<std::string> themes;
  std::set<std::string> keywords;
};

struct Counts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  Counts& operator+=(const Counts& o) {
    tp += o.tp, fp += o.fp, fn += o.fn;
    return *this;
  }
  friend bool operator==(const Counts&, const Counts&) = default;
};

/// Precision/recall of one label category. A ratio whose denominator is 0
/// is absent, never 0.
struct CategoryMetrics {
  Counts counts;

  std::optional<Weight> precision() const;
  std::optional<Weight> recall() const;

  friend bool operator==(const CategoryMetrics&, const CategoryMetrics&) = default;
};

struct Metrics {
  CategoryMetrics themes;
  CategoryMetrics keywords;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

struct ScoreOptions {
  bool plural_folding = false;  // drop one trailing 's' before matching
};

/// Case-folded, whitespace and underscores unified; see normalize_surface.
std::string normalize_label(std::string_view label, const ScoreOptions& opts = {});

/// Exact set comparison after normalize_label on both sides.
CategoryMetrics compare_labels(const std::set<std::string>& predicted,
                               const std::set<std::string>& gold, const ScoreOptions& opts = {});

/// Predicted keywords are pooled across themes.
Metrics score(const ExtractionResult& predicted, const GoldIndex& gold,
              const ScoreOptions& opts = {});

/// Micro-average: counts are summed, ratios recomputed. Throws
/// ParameterError on an empty sequence.
Metrics aggregate(std::span<const Metrics> per_doc);

}  // namespace themegraph
