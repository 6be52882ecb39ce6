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

namespace themegraph::unicode {

inline constexpr char32_t kReplacement = U'�';

/// Decodes UTF-8, replacing every invalid or truncated sequence with
/// U+FFFD. `replaced`, when given, receives the number of replacements.
std::u32string decode(std::string_view utf8, std::size_t* replaced = nullptr);

std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

bool is_alnum(char32_t cp);
bool is_space(char32_t cp);
char32_t to_lower(char32_t cp);

/// Simple per-code-point lowercase of a UTF-8 string.
std::string fold_case(std::string_view utf8);

}  // namespace themegraph::unicode
