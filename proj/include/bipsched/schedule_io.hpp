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

// Schedule text format, one field per line in fixed order:
//
//   schedule
//   algorithm alg1
//   speeds 12/1 1/1 1/1 1/1
//   jobs 15
//   machine 1 speed 12/1 load 12 time 1/1 : 1 2 3 4 6 7 8 9 11 12 13 14
//   machine 2 speed 1/1 load 1 time 1/1 : 0
//   ...
//   makespan 1/1
//
// Only the job lists, speeds, algorithm and makespan are read back; the
// load and time fields are derived and ignored by the parser.

#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bipsched/error.hpp"
#include "bipsched/rational.hpp"
#include "bipsched/sched.hpp"

namespace bipsched {

inline std::string serialize_schedule(const Schedule& s, const MachineConfig& cfg) {
  std::ostringstream out;
  out << "schedule\n";
  out << "algorithm " << s.algorithm << '\n';
  out << "speeds";
  for (const Rational& r : cfg.speeds()) out << ' ' << format_rational(r);
  out << '\n';
  out << "jobs " << s.assignment.vertex_count() << '\n';
  for (std::size_t i = 0; i < s.assignment.k(); ++i) {
    const auto& jobs = s.assignment.classes[i];
    const Rational speed = i < cfg.m() ? cfg.speed(i) : Rational(1);
    out << "machine " << (i + 1) << " speed " << format_rational(speed) << " load "
        << jobs.size() << " time "
        << format_rational(Rational(static_cast<std::int64_t>(jobs.size())) / speed) << " :";
    for (Vertex v : jobs) out << ' ' << v;
    out << '\n';
  }
  out << "makespan " << format_rational(s.makespan) << '\n';
  return out.str();
}

struct ParsedSchedule {
  Schedule schedule;
  std::vector<Rational> speeds;
};

inline ParsedSchedule parse_schedule(std::string_view text) {
  ParsedSchedule out;
  std::size_t line_no = 0;
  bool have_makespan = false;
  bool have_magic = false;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kSyntaxError, "line " + std::to_string(line_no) + ": " + what, {},
                line_no);
  };
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    if (key == "schedule") {
      have_magic = true;
    } else if (key == "algorithm") {
      ls >> out.schedule.algorithm;
    } else if (key == "speeds") {
      for (std::string tok; ls >> tok;) out.speeds.push_back(parse_rational(tok));
    } else if (key == "jobs") {
      continue;
    } else if (key == "machine") {
      std::size_t index = 0;
      if (!(ls >> index) || index != out.schedule.assignment.k() + 1) {
        fail("machine lines must be numbered 1, 2, ... in order");
      }
      std::string tok;
      while (ls >> tok && tok != ":") {
      }
      if (tok != ":") fail("machine line lacks ':' before the job list");
      std::vector<Vertex> jobs;
      for (long long v; ls >> v;) {
        if (v < 0) fail("negative job id");
        jobs.push_back(static_cast<Vertex>(v));
      }
      if (!ls.eof()) fail("malformed job list");
      out.schedule.assignment.classes.push_back(std::move(jobs));
    } else if (key == "makespan") {
      std::string tok;
      if (!(ls >> tok)) fail("makespan needs a value");
      out.schedule.makespan = parse_rational(tok);
      have_makespan = true;
    } else {
      fail("unknown field '" + key + "'");
    }
  }
  if (!have_magic) throw Error(ErrorCode::kSyntaxError, "missing 'schedule' header");
  if (!have_makespan) throw Error(ErrorCode::kSyntaxError, "missing makespan");
  return out;
}

}  // namespace bipsched
