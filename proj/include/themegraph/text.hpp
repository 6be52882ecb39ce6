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
#include <string>
#include <string_view>
#include <vector>

#include "themegraph/taxonomy.hpp"

namespace themegraph {

struct Token {
  std::string text;
  std::size_t position = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

struct TokenSpan {
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

/// A word or n-word group of the document found in the lexicon.
struct EntityMatch {
  std::string surface;  // underscore-joined tokens; a lexicon key
  TokenSpan span;
  std::vector<ConceptId> concepts;  // sorted, never empty

  std::size_t arity() const noexcept { return span.length; }

  friend bool operator==(const EntityMatch&, const EntityMatch&) = default;
};

/// Splits text into lowercase word tokens.
///
/// A word is a maximal run of Unicode letters and digits; hyphens and
/// apostrophes (' and U+2019) are kept only inside a run. An apostrophe
/// elides its left part, so "d'angles" yields "angles" and "l'homme" yields
/// "homme". Everything else is a separator. Invalid UTF-8 is replaced by
/// U+FFFD (a separator); the number of replacements goes to `replaced`.
std::vector<Token> tokenize(std::string_view text, std::size_t* replaced = nullptr);

/// Longest-match-first lexicon lookup over windows of n_max..1 tokens.
///
/// Windows touching a token already claimed by a longer match are skipped;
/// same-length matches may overlap. Matches come back in document order
/// (start ascending, longer first), repeats included. Throws ParameterError
/// when n_max < 1.
std::vector<EntityMatch> extract_candidates(const std::vector<Token>& tokens, int n_max,
                                            const Taxonomy& t);

}  // namespace themegraph
