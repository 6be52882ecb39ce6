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

#include <filesystem>

#include "json.hpp"
#include "themegraph/entity_graph.hpp"
#include "themegraph/fusion.hpp"
#include "themegraph/selection.hpp"

namespace themegraph {

/// Every knob of one extraction run. Defaults: depth 5, specific-heavy
/// weights, summed shared relations, exclusive relations kept, n-grams up
/// to 3 words with priority on.
struct RunConfig {
  WeightProfile profile;
  FusionConfig fusion;
  int ngram_max = 3;
  SelectionConfig selection;

  void check() const;
};

/// Overrides defaults with the fields present in `j`. Unknown keys and bad
/// values throw ParameterError naming the field. Rationals (alpha,
/// attenuation) may be JSON numbers or strings such as "1/2".
RunConfig parse_run_config(const nlohmann::json& j);
RunConfig load_run_config(const std::filesystem::path& path);

nlohmann::json to_json(const RunConfig& cfg);

}  // namespace themegraph
