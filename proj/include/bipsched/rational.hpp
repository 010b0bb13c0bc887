// Copyright 2026 The Authors.
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

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bipsched/error.hpp"

namespace bipsched {

using Rational = boost::rational<std::int64_t>;

/// Always "p/q", including integers ("6/1").
inline std::string format_rational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

inline bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace detail

/// Parses "7", "-3", "3/2". Throws kSyntaxError.
inline Rational parse_rational(std::string_view text) {
  text = detail::trim(text);
  std::int64_t num = 0;
  std::int64_t den = 1;
  const auto slash = text.find('/');
  bool ok = false;
  if (slash == std::string_view::npos) {
    ok = detail::parse_int(text, num);
  } else {
    ok = detail::parse_int(detail::trim(text.substr(0, slash)), num) &&
         detail::parse_int(detail::trim(text.substr(slash + 1)), den);
  }
  if (!ok || den == 0) {
    throw Error(ErrorCode::kSyntaxError,
                "not a rational number: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

/// Comma separated list, e.g. "12,1,1,1" or "3/2, 1, 1, 1".
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

/// Largest integer j with j <= r (r may be negative).
inline std::int64_t floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

}  // namespace bipsched
