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

#include "themegraph/config.hpp"

#include <charconv>
#include <fstream>

#include "themegraph/error.hpp"

namespace themegraph {
namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw ParameterError("config field '" + field + "': " + why);
}

long long integer_field(const nlohmann::json& v, const std::string& field) {
  if (!v.is_number_integer()) bad_field(field, "expected an integer");
  return v.get<long long>();
}

Weight rational_field(const nlohmann::json& v, const std::string& field) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Weight(v.get<long long>());
    if (v.is_number_float()) {
      // Shortest round-trip decimal, so 0.1 means 1/10.
      char buf[64];
      auto res = std::to_chars(buf, buf + sizeof buf, v.get<double>());
      return parse_rational(std::string_view(buf, res.ptr - buf));
    }
  } catch (const ParameterError& e) {
    bad_field(field, e.what());
  }
  bad_field(field, "expected a number or a rational string");
}

std::string string_field(const nlohmann::json& v, const std::string& field) {
  if (!v.is_string()) bad_field(field, "expected a string");
  return v.get<std::string>();
}

}  // namespace

void RunConfig::check() const {
  try {
    profile.check();
  } catch (const ParameterError& e) {
    bad_field("depth", e.what());
  }
  if (ngram_max < 1) bad_field("ngram_max", "must be >= 1, got " + std::to_string(ngram_max));
  const auto& c = fusion.combiner;
  if (c.kind == Combiner::Kind::kWeightedSum && (c.alpha <= 0 || c.alpha > 1)) {
    bad_field("alpha", "must lie in (0, 1], got " + to_string(c.alpha));
  }
  const auto& x = fusion.exclusive;
  if (x.kind == ExclusivePolicy::Kind::kAttenuate && (x.factor <= 0 || x.factor >= 1)) {
    bad_field("attenuation", "must lie in (0, 1), got " + to_string(x.factor));
  }
  if (selection.max_themes < 1) bad_field("max_themes", "must be >= 1");
  if (selection.distance_tolerance < 0) bad_field("distance_tolerance", "must be >= 0");
}

RunConfig parse_run_config(const nlohmann::json& j) {
  if (!j.is_object()) throw ParameterError("config must be a JSON object");
  RunConfig cfg;
  std::optional<Weight> alpha;
  std::optional<Weight> attenuation;
  std::string combiner = "sum";
  std::string policy = "keep";

  for (const auto& [key, v] : j.items()) {
    if (key == "depth") {
      auto d = integer_field(v, key);
      if (d < 1 || d > 1000) bad_field(key, "must be in 1..1000, got " + std::to_string(d));
      cfg.profile.depth_cap = static_cast<int>(d);
    } else if (key == "profile") {
      try {
        cfg.profile.kind = parse_weight_kind(string_field(v, key));
      } catch (const ParameterError& e) {
        bad_field(key, e.what());
      }
    } else if (key == "combiner") {
      combiner = string_field(v, key);
      if (combiner != "sum" && combiner != "weighted_sum") {
        bad_field(key, "expected 'sum' or 'weighted_sum'");
      }
    } else if (key == "alpha") {
      alpha = rational_field(v, key);
    } else if (key == "exclusive_policy") {
      policy = string_field(v, key);
      if (policy != "keep" && policy != "attenuate") {
        bad_field(key, "expected 'keep' or 'attenuate'");
      }
    } else if (key == "attenuation") {
      attenuation = rational_field(v, key);
    } else if (key == "ngram_max") {
      auto n = integer_field(v, key);
      if (n < 1 || n > 64) bad_field(key, "must be in 1..64, got " + std::to_string(n));
      cfg.ngram_max = static_cast<int>(n);
    } else if (key == "ngram_priority") {
      if (!v.is_boolean()) bad_field(key, "expected a boolean");
      cfg.fusion.ngram_priority = v.get<bool>();
    } else if (key == "max_themes") {
      auto n = integer_field(v, key);
      if (n < 1) bad_field(key, "must be >= 1, got " + std::to_string(n));
      cfg.selection.max_themes = static_cast<std::size_t>(n);
    } else if (key == "distance_tolerance") {
      auto n = integer_field(v, key);
      if (n < 0 || n > 1000000) bad_field(key, "must be >= 0, got " + std::to_string(n));
      cfg.selection.distance_tolerance = static_cast<int>(n);
    } else if (key == "keyword_mode") {
      try {
        cfg.selection.keyword_mode = parse_keyword_mode(string_field(v, key));
      } catch (const ParameterError& e) {
        bad_field(key, e.what());
      }
    } else {
      bad_field(key, "unknown field");
    }
  }

  if (combiner == "weighted_sum") {
    if (!alpha) bad_field("alpha", "required when combiner is 'weighted_sum'");
    cfg.fusion.combiner = Combiner::weighted_sum(*alpha);
  } else if (alpha) {
    bad_field("alpha", "only valid with combiner 'weighted_sum'");
  }
  if (policy == "attenuate") {
    if (!attenuation) bad_field("attenuation", "required when exclusive_policy is 'attenuate'");
    cfg.fusion.exclusive = ExclusivePolicy::attenuate(*attenuation);
  } else if (attenuation) {
    bad_field("attenuation", "only valid with exclusive_policy 'attenuate'");
  }
  cfg.check();
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParameterError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_run_config(j);
}

nlohmann::json to_json(const RunConfig& cfg) {
  nlohmann::json j;
  j["depth"] = cfg.profile.depth_cap;
  j["profile"] = to_string(cfg.profile.kind);
  j["combiner"] = cfg.fusion.combiner.kind == Combiner::Kind::kSum ? "sum" : "weighted_sum";
  if (cfg.fusion.combiner.kind == Combiner::Kind::kWeightedSum) {
    j["alpha"] = to_string(cfg.fusion.combiner.alpha);
  }
  j["exclusive_policy"] =
      cfg.fusion.exclusive.kind == ExclusivePolicy::Kind::kKeep ? "keep" : "attenuate";
  if (cfg.fusion.exclusive.kind == ExclusivePolicy::Kind::kAttenuate) {
    j["attenuation"] = to_string(cfg.fusion.exclusive.factor);
  }
  j["ngram_max"] = cfg.ngram_max;
  j["ngram_priority"] = cfg.fusion.ngram_priority;
  j["max_themes"] = cfg.selection.max_themes;
  j["distance_tolerance"] = cfg.selection.distance_tolerance;
  j["keyword_mode"] = to_string(cfg.selection.keyword_mode);
  return j;
}

}  // namespace themegraph
