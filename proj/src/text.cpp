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

#include "themegraph/text.hpp"

#include <algorithm>

#include "themegraph/error.hpp"
#include "themegraph/unicode.hpp"

namespace themegraph {
namespace {

bool is_hyphen(char32_t cp) { return cp == U'-' || cp == U'‐' || cp == U'‑'; }
bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == U'’'; }
bool is_joiner(char32_t cp) { return is_hyphen(cp) || is_apostrophe(cp); }

// Turns one raw run of letters, digits and joiners into a token text, or an
// empty string when nothing word-like remains.
std::string finish_word(std::u32string_view run) {
  while (!run.empty() && is_joiner(run.front())) run.remove_prefix(1);
  while (!run.empty() && is_joiner(run.back())) run.remove_suffix(1);
  for (std::size_t i = run.size(); i-- > 0;) {
    if (is_apostrophe(run[i])) {
      run.remove_prefix(i + 1);
      break;
    }
  }
  while (!run.empty() && is_joiner(run.front())) run.remove_prefix(1);
  std::string out;
  for (char32_t cp : run) {
    unicode::append(out, is_hyphen(cp) ? U'-' : unicode::to_lower(cp));
  }
  return out;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, std::size_t* replaced) {
  const std::u32string cps = unicode::decode(text, replaced);
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (!unicode::is_alnum(cps[i]) && !is_joiner(cps[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && (unicode::is_alnum(cps[j]) || is_joiner(cps[j]))) ++j;
    std::string word = finish_word(std::u32string_view(cps).substr(i, j - i));
    if (!word.empty()) tokens.push_back({std::move(word), tokens.size()});
    i = j;
  }
  return tokens;
}

std::vector<EntityMatch> extract_candidates(const std::vector<Token>& tokens, int n_max,
                                            const Taxonomy& t) {
  if (n_max < 1) throw ParameterError("n_max must be >= 1, got " + std::to_string(n_max));
  std::vector<EntityMatch> matches;
  std::vector<bool> claimed(tokens.size(), false);
  const std::size_t longest = std::min<std::size_t>(static_cast<std::size_t>(n_max), tokens.size());

  std::string key;
  for (std::size_t n = longest; n >= 1; --n) {
    const std::size_t first_new = matches.size();
    for (std::size_t start = 0; start + n <= tokens.size(); ++start) {
      if (std::any_of(claimed.begin() + start, claimed.begin() + start + n,
                      [](bool b) { return b; })) {
        continue;
      }
      key.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (k) key.push_back('_');
        key += tokens[start + k].text;
      }
      auto concepts = t.lookup_normalized(key);
      if (concepts.empty()) continue;
      EntityMatch m{key, {start, n}, {}};
      m.concepts.reserve(concepts.size());
      for (auto c : concepts) m.concepts.push_back(t.name(c));
      std::sort(m.concepts.begin(), m.concepts.end());
      matches.push_back(std::move(m));
    }
    for (std::size_t i = first_new; i < matches.size(); ++i) {
      const auto& s = matches[i].span;
      std::fill(claimed.begin() + s.start, claimed.begin() + s.start + s.length, true);
    }
  }
  std::stable_sort(matches.begin(), matches.end(), [](const EntityMatch& a, const EntityMatch& b) {
    if (a.span.start != b.span.start) return a.span.start < b.span.start;
    return a.span.length > b.span.length;
  });
  return matches;
}

}  // namespace themegraph
