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

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "themegraph/evaluation.hpp"
#include "themegraph/fusion.hpp"
#include "themegraph/selection.hpp"
#include "themegraph/taxonomy.hpp"

namespace themegraph {

/// Debug dump: nodes with contributors, edges with exact weights ("p/q").
nlohmann::json to_json(const ConsolidatedGraph& g);

/// `{doc, themes:[{node, kind, flow, flow_exact, depth, keywords:[{node,
/// kind, distance}]}], ignored_word_graphs}`.
nlohmann::json to_json(const ExtractionResult& r);
/// Reads what to_json(ExtractionResult) writes. Only labels, kinds and
/// distances are needed downstream; missing flow defaults to 0.
ExtractionResult extraction_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ValidationReport& r);

/// `{precision, recall, tp, fp, fn}`; undefined ratios are null.
nlohmann::json to_json(const CategoryMetrics& m);
nlohmann::json to_json(const Metrics& m);

/// Gold file: array of `{doc_id, themes:[...], keywords:[...]}`.
std::vector<GoldIndex> gold_from_json(const nlohmann::json& j);

}  // namespace themegraph
