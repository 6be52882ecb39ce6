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
#include <string_view>

#include "themegraph/config.hpp"
#include "themegraph/fusion.hpp"
#include "themegraph/selection.hpp"
#include "themegraph/taxonomy.hpp"

namespace themegraph {

struct DocumentTrace {
  std::size_t tokens = 0;
  std::size_t matches = 0;
  std::size_t replaced_sequences = 0;
  std::optional<ConsolidatedGraph> graph;  // absent when nothing matched
};

/// Text to themes and keywords: tokenize, match against the lexicon, build
/// one entity graph per match, fuse (with n-gram priority when enabled) and
/// select. A document with no match yields an empty result.
ExtractionResult extract_document(std::string_view text, const Taxonomy& t, const RunConfig& cfg,
                                  DocumentTrace* trace = nullptr);

}  // namespace themegraph
