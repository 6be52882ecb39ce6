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

#include "themegraph/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "themegraph/config.hpp"
#include "themegraph/error.hpp"
#include "themegraph/evaluation.hpp"
#include "themegraph/json_io.hpp"
#include "themegraph/pipeline.hpp"
#include "themegraph/taxonomy.hpp"

namespace themegraph::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// Reported to the user as-is with exit code 2.
struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const fs::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw UsageError(path.string() + " is not valid JSON: " + e.what());
  }
}

void require_file(const fs::path& path, const char* flag) {
  std::error_code ec;
  if (!fs::exists(path, ec)) {
    throw UsageError(std::string(flag) + ": no such file: " + path.string());
  }
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

Taxonomy load(const fs::path& edges, const fs::path& lexicon) {
  require_file(edges, "--edges");
  require_file(lexicon, "--lexicon");
  try {
    return load_taxonomy(edges, lexicon);
  } catch (const ParseError& e) {
    throw UsageError("cannot load taxonomy: " + std::string(e.what()));
  } catch (const ParameterError& e) {
    throw UsageError("cannot load taxonomy: " + std::string(e.what()));
  }
}

struct ExtractArgs {
  std::string edges, lexicon, doc, config, dump_graph;
  unsigned jobs = 1;
};

int run_extract(const ExtractArgs& a, std::ostream& out) {
  RunConfig cfg;
  if (!a.config.empty()) {
    require_file(a.config, "--config");
    try {
      cfg = load_run_config(a.config);
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
  }
  const Taxonomy t = load(a.edges, a.lexicon);

  require_file(a.doc, "--doc");
  const bool many = fs::is_directory(a.doc);
  std::vector<fs::path> docs;
  if (many) {
    for (const auto& entry : fs::directory_iterator(a.doc)) {
      if (entry.is_regular_file()) docs.push_back(entry.path());
    }
    std::sort(docs.begin(), docs.end());
  } else {
    docs.emplace_back(a.doc);
  }

  std::vector<ExtractionResult> results(docs.size());
  std::vector<DocumentTrace> traces(docs.size());
  std::vector<std::string> failures(docs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < docs.size();) {
      try {
        results[i] = extract_document(read_file(docs[i]), t, cfg, &traces[i]);
        results[i].doc = docs[i].stem().string();
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(a.jobs, static_cast<unsigned>(docs.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& f : failures) {
    if (!f.empty()) throw UsageError(f);
  }

  if (!a.dump_graph.empty()) {
    auto dump_one = [](const DocumentTrace& tr) {
      return tr.graph ? to_json(*tr.graph) : to_json(ConsolidatedGraph{});
    };
    json dump;
    if (many) {
      dump = json::object();
      for (std::size_t i = 0; i < docs.size(); ++i) dump[docs[i].filename().string()] = dump_one(traces[i]);
    } else {
      dump = dump_one(traces.front());
    }
    std::ofstream f(a.dump_graph);
    if (!f) throw UsageError("cannot write graph dump: " + a.dump_graph);
    f << dump.dump(2) << '\n';
  }

  if (many) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(to_json(r));
    print(out, arr);
  } else {
    print(out, to_json(results.front()));
  }
  return kOk;
}

struct EvalArgs {
  std::string predictions, gold;
  bool plural_folding = false;
};

int run_eval(const EvalArgs& a, std::ostream& out) {
  require_file(a.predictions, "--predictions");
  require_file(a.gold, "--gold");
  json pj = read_json(a.predictions);
  if (pj.is_object()) pj = json::array({pj});
  if (!pj.is_array()) throw UsageError("--predictions must hold a JSON array of extraction results");

  std::vector<GoldIndex> gold;
  std::vector<ExtractionResult> predicted;
  try {
    gold = gold_from_json(read_json(a.gold));
    for (const auto& p : pj) predicted.push_back(extraction_result_from_json(p));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }

  std::map<std::string, const GoldIndex*> by_id;
  for (const auto& g : gold) {
    if (!by_id.emplace(g.doc_id, &g).second) throw UsageError("duplicate gold doc_id '" + g.doc_id + "'");
  }

  const ScoreOptions opts{a.plural_folding};
  std::map<std::string, Metrics> per_doc;
  json unmatched = json::array();
  for (const auto& p : predicted) {
    auto it = by_id.find(p.doc);
    if (it == by_id.end()) {
      unmatched.push_back(p.doc);
      continue;
    }
    if (!per_doc.emplace(p.doc, score(p, *it->second, opts)).second) {
      throw UsageError("duplicate prediction for doc '" + p.doc + "'");
    }
  }
  json missing = json::array();
  for (const auto& [id, g] : by_id) {
    if (per_doc.count(id)) continue;
    missing.push_back(id);
    per_doc.emplace(id, score(ExtractionResult{}, *g, opts));
  }
  if (per_doc.empty()) throw UsageError("no documents to score");

  std::vector<Metrics> all;
  json docs = json::object();
  for (const auto& [id, m] : per_doc) {
    all.push_back(m);
    docs[id] = to_json(m);
  }
  json report = to_json(aggregate(all));
  report["documents"] = all.size();
  report["per_document"] = std::move(docs);
  report["unmatched_docs"] = std::move(unmatched);
  report["missing_predictions"] = std::move(missing);
  print(out, report);
  return kOk;
}

int run_validate(const std::string& edges, const std::string& lexicon, std::ostream& out) {
  const Taxonomy t = load(edges, lexicon);
  const auto report = validate_taxonomy(t);
  print(out, to_json(report));
  return report.self_loop_count == 0 && report.orphan_lexicon_entries == 0 ? kOk : kFindings;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Theme and keyword extraction over a concept hierarchy", "themegraph"};
  app.require_subcommand(1);

  ExtractArgs ex;
  auto* extract = app.add_subcommand("extract", "Extract themes and keywords from plain-text documents");
  extract->add_option("--edges", ex.edges, "Taxonomy edges TSV (parent<TAB>child)")->required();
  extract->add_option("--lexicon", ex.lexicon, "Lexicon TSV (surface<TAB>concept)")->required();
  extract->add_option("--doc", ex.doc, "UTF-8 text file, or a directory of them")->required();
  extract->add_option("--config", ex.config, "JSON run configuration");
  extract->add_option("--dump-graph", ex.dump_graph, "Write the fused graph as JSON to this path");
  extract->add_option("--jobs", ex.jobs, "Worker threads for directory input")->check(CLI::Range(1u, 1024u));

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Score predictions against gold annotations");
  eval->add_option("--predictions", ev.predictions, "JSON array of extraction results")->required();
  eval->add_option("--gold", ev.gold, "Gold JSON: [{doc_id, themes, keywords}]")->required();
  eval->add_flag("--plural-folding", ev.plural_folding, "Ignore one trailing 's' when matching");

  std::string v_edges, v_lexicon;
  auto* validate = app.add_subcommand("validate", "Check a taxonomy and report anomalies");
  validate->add_option("--edges", v_edges, "Taxonomy edges TSV")->required();
  validate->add_option("--lexicon", v_lexicon, "Lexicon TSV")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*extract) return run_extract(ex, out);
    if (*eval) return run_eval(ev, out);
    return run_validate(v_edges, v_lexicon, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace themegraph::cli
