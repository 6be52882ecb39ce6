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

#include <iosfwd>
#include <string>
#include <vector>

namespace themegraph::cli {

/// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFindings = 1;  // validate: self-loops or orphan lexicon entries
inline constexpr int kUsage = 2;     // bad flags, unreadable files, invalid config

/// Runs `themegraph <args...>` (program name excluded) against the given
/// streams and returns the exit code. Subcommands: extract, eval, validate.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace themegraph::cli
