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

#include "themegraph/rational.hpp"

#include <cctype>

#include "themegraph/error.hpp"

namespace themegraph {
namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

cpp_int pow10(long exponent) {
  cpp_int r = 1;
  for (long i = 0; i < exponent; ++i) r *= 10;
  return r;
}

[[noreturn]] void reject(std::string_view text) {
  throw ParameterError("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Weight parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) reject(text);

  Weight value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) reject(text);
    auto strip = [](std::string_view v) {
      v.remove_prefix(std::min(v.find_first_not_of('0'), v.size() - 1));
      return v;
    };
    num = strip(num);
    den = strip(den);
    cpp_int d{std::string(den)};
    if (d == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
    value = Weight(cpp_int{std::string(num)}, d);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 4) reject(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    auto dot = s.find('.');
    std::string digits(s.substr(0, dot));
    if (dot != std::string_view::npos) {
      auto frac = s.substr(dot + 1);
      if (!frac.empty() && !all_digits(frac)) reject(text);
      digits += frac;
      exponent -= static_cast<long>(frac.size());
    }
    if (!all_digits(digits)) reject(text);
    // A leading zero would make cpp_int read the digits as octal.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    cpp_int mantissa{digits};
    value = exponent >= 0 ? Weight(mantissa * pow10(exponent))
                          : Weight(mantissa, pow10(-exponent));
  }
  return negative ? Weight(-value) : value;
}

std::string to_string(const Weight& w) {
  auto num = boost::multiprecision::numerator(w);
  auto den = boost::multiprecision::denominator(w);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Weight& w) { return w.convert_to<double>(); }

}  // namespace themegraph
