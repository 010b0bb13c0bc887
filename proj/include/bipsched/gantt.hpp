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

#include <optional>
#include <sstream>
#include <string>

#include "bipsched/rational.hpp"
#include "bipsched/sched.hpp"

namespace bipsched {

/// Static SVG Gantt chart: one row per machine, one cell per job of width
/// 1/s_i, bar end labelled with the exact completion time. A dashed line
/// marks the ideal length when it is given.
inline std::string gantt_svg(const Schedule& s, const MachineConfig& cfg,
                             std::optional<Rational> ideal = std::nullopt) {
  constexpr double kLeft = 110.0;
  constexpr double kWidth = 640.0;
  constexpr double kRow = 34.0;
  constexpr double kBar = 22.0;
  const double span = boost::rational_cast<double>(s.makespan);
  const double scale = span > 0 ? kWidth / span : 0.0;
  const double height = 40.0 + kRow * static_cast<double>(s.assignment.k()) + 30.0;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (kLeft + kWidth + 90)
      << "\" height=\"" << height << "\" font-family=\"monospace\" font-size=\"12\">\n";
  svg << "  <text x=\"10\" y=\"20\">" << s.algorithm
      << "  C_max = " << format_rational(s.makespan) << "</text>\n";
  for (std::size_t i = 0; i < s.assignment.k() && i < cfg.m(); ++i) {
    const double y = 34.0 + kRow * static_cast<double>(i);
    const Rational speed = cfg.speed(i);
    const double cell = scale / boost::rational_cast<double>(speed);
    svg << "  <text x=\"10\" y=\"" << (y + 15) << "\">M" << (i + 1) << " s="
        << format_rational(speed) << "</text>\n";
    const auto& jobs = s.assignment.classes[i];
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      const double x = kLeft + cell * static_cast<double>(j);
      svg << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\""
          << kBar << "\" fill=\"#9ecae1\" stroke=\"#3182bd\"/>\n";
      if (cell >= 18.0) {
        svg << "  <text x=\"" << (x + 3) << "\" y=\"" << (y + 15) << "\">" << jobs[j]
            << "</text>\n";
      }
    }
    const Rational done = Rational(static_cast<std::int64_t>(jobs.size())) / speed;
    svg << "  <text x=\"" << (kLeft + cell * static_cast<double>(jobs.size()) + 6) << "\" y=\""
        << (y + 15) << "\">" << format_rational(done) << "</text>\n";
  }
  if (ideal && scale > 0) {
    const double x = kLeft + scale * boost::rational_cast<double>(*ideal);
    svg << "  <line x1=\"" << x << "\" y1=\"28\" x2=\"" << x << "\" y2=\"" << (height - 24)
        << "\" stroke=\"#de2d26\" stroke-dasharray=\"4 3\"/>\n";
    svg << "  <text x=\"" << x << "\" y=\"" << (height - 10) << "\">ideal "
        << format_rational(*ideal) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace bipsched
