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

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace themegraph {

/// Exact weight arithmetic. Every relation weight, flow and metric ratio in
/// the library is a `Weight`; floating point only appears at the JSON edge.
using Weight = boost::multiprecision::cpp_rational;

/// Parses "7", "-3/4", "0.125" or "1e-2" exactly. Throws ParameterError.
Weight parse_rational(std::string_view text);

/// Canonical text form: "n" for integers, "p/q" otherwise.
std::string to_string(const Weight& w);

double to_double(const Weight& w);

}  // namespace themegraph
