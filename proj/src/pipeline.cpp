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

#include "themegraph/pipeline.hpp"

#include <vector>

#include "themegraph/entity_graph.hpp"
#include "themegraph/text.hpp"

namespace themegraph {

ExtractionResult extract_document(std::string_view text, const Taxonomy& t, const RunConfig& cfg,
                                  DocumentTrace* trace) {
  cfg.check();
  std::size_t replaced = 0;
  const auto tokens = tokenize(text, &replaced);
  const auto matches = extract_candidates(tokens, cfg.ngram_max, t);
  if (trace) {
    trace->tokens = tokens.size();
    trace->matches = matches.size();
    trace->replaced_sequences = replaced;
    trace->graph.reset();
  }
  if (matches.empty()) return {};

  std::vector<EntityGraph> ngram_graphs;
  std::vector<EntityGraph> word_graphs;
  for (const auto& m : matches) {
    auto g = build_entity_graph(t, m, cfg.profile);
    if (cfg.fusion.ngram_priority && m.arity() > 1) {
      ngram_graphs.push_back(std::move(g));
    } else {
      word_graphs.push_back(std::move(g));
    }
  }
  auto fused = apply_ngram_priority(ngram_graphs, word_graphs, cfg.fusion);
  auto result = select(fused, cfg.selection);
  if (trace) trace->graph = std::move(fused);
  return result;
}

}  // namespace themegraph
