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

// Ratio benchmark: expands a JSON config into instances, runs each
// algorithm under each speed regime, compares against the exact optimum and
// checks the proven ratio bound of every (algorithm, regime) pair.
//
// Config example:
//   {
//     "families": ["random", {"family": "star-forest", "stars": 3}],
//     "sizes": [10, 12, 14],
//     "seeds": [1, 2, 3],
//     "regimes": ["12,1,1,1", [2, 1, 1, 1]],
//     "algorithms": ["1", "4"],
//     "oracle_budget": 16
//   }

#pragma once

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bipsched/error.hpp"
#include "bipsched/generators.hpp"
#include "bipsched/graph.hpp"
#include "bipsched/oracle.hpp"
#include "bipsched/rational.hpp"
#include "bipsched/sched.hpp"

namespace bipsched {

struct BenchFamily {
  Family family = Family::kRandomBounded;
  FamilyParams params;
};

struct BenchConfig {
  std::vector<BenchFamily> families;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
  std::vector<MachineConfig> regimes;
  std::vector<Algorithm> algorithms;
  OracleBudget budget;
};

struct BenchInstance {
  std::string id;
  std::uint64_t seed = 0;
  BipartiteGraph graph;
  bool isolate_free = false;
};

enum class RecordStatus { kOk, kSkipped, kBudget, kError, kViolation };

inline std::string_view to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::kOk: return "ok";
    case RecordStatus::kSkipped: return "skip";
    case RecordStatus::kBudget: return "budget";
    case RecordStatus::kError: return "error";
    case RecordStatus::kViolation: return "VIOLATION";
  }
  return "?";
}

struct BenchRecord {
  std::string instance;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t max_degree = 0;
  std::string speeds;
  std::string algorithm;
  std::optional<Rational> makespan;
  std::optional<Rational> optimum;
  std::optional<Rational> ratio;
  double seconds = 0.0;
  RecordStatus status = RecordStatus::kOk;
  std::string note;
};

struct BenchSummaryRow {
  std::string speeds;
  std::string algorithm;
  std::size_t checked = 0;
  std::optional<Rational> max_ratio;
  std::string bound;
  std::size_t violations = 0;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  std::vector<BenchSummaryRow> summary;
  std::size_t violations = 0;
  std::size_t errors = 0;
};

namespace detail {

inline std::size_t json_size(const nlohmann::json& j, std::string_view key, std::size_t fallback) {
  return j.contains(key) ? j.at(std::string(key)).get<std::size_t>() : fallback;
}

inline BenchFamily parse_bench_family(const nlohmann::json& j) {
  BenchFamily out;
  const std::string name = j.is_string() ? j.get<std::string>() : j.at("family").get<std::string>();
  const auto family = parse_family(name);
  if (!family) throw Error(ErrorCode::kInvalidParams, "unknown family '" + name + "'");
  out.family = *family;
  out.params.isolate_free = true;
  if (j.is_object()) {
    FamilyParams& p = out.params;
    p.n = json_size(j, "n", p.n);
    p.stars = json_size(j, "stars", p.stars);
    p.leaves = json_size(j, "leaves", p.leaves);
    p.a = json_size(j, "a", p.a);
    p.b = json_size(j, "b", p.b);
    p.pendants = static_cast<unsigned>(json_size(j, "pendants", p.pendants));
    p.max_degree = json_size(j, "max_degree", p.max_degree);
    if (j.contains("density")) p.density = j.at("density").get<double>();
    if (j.contains("isolate_free")) p.isolate_free = j.at("isolate_free").get<bool>();
  }
  return out;
}

inline MachineConfig parse_regime(const nlohmann::json& j) {
  if (j.is_string()) return MachineConfig(parse_rational_list(j.get<std::string>()));
  std::vector<Rational> speeds;
  for (const auto& s : j) {
    speeds.push_back(s.is_string() ? parse_rational(s.get<std::string>())
                                   : Rational(s.get<std::int64_t>()));
  }
  return MachineConfig(std::move(speeds));
}

inline bool sized_family(Family f) {
  return f == Family::kRandomBounded || f == Family::kPath || f == Family::kCycle;
}

/// The bound an algorithm is proven to meet under `cfg`, if any, as
/// (is_equality, value).
inline std::optional<std::pair<bool, Rational>> proven_bound(Algorithm a, const MachineConfig& cfg) {
  const Rational s1 = cfg.speed(0);
  const Rational s2 = cfg.m() > 1 ? cfg.speed(1) : Rational(0);
  const Rational s3 = cfg.m() > 2 ? cfg.speed(2) : Rational(0);
  switch (a) {
    case Algorithm::kAlg1:
      if (s1 >= Rational(12) * s2) return std::pair{true, Rational(1)};
      if (s1 >= Rational(2) * s2) return std::pair{false, Rational(2)};
      return std::nullopt;
    case Algorithm::kAlg2:
      if (s2 >= Rational(3) * s3) return std::pair{false, Rational(32, 15)};
      return std::nullopt;
    case Algorithm::kAlg3:
      if (s2 <= Rational(3) * s3) return std::pair{false, Rational(2)};
      return std::nullopt;
    case Algorithm::kAlg4: return std::pair{false, Rational(32, 15)};
    case Algorithm::kWideGapM: return std::pair{true, Rational(1)};
  }
  return std::nullopt;
}

inline std::string bound_text(const std::optional<std::pair<bool, Rational>>& b) {
  if (!b) return "-";
  return (b->first ? "= " : "<= ") + format_rational(b->second);
}

}  // namespace detail

inline BenchConfig parse_bench_config(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSyntaxError, std::string("bench config: ") + e.what());
  }
  BenchConfig cfg;
  try {
    for (const auto& f : j.value("families", nlohmann::json::array())) {
      cfg.families.push_back(detail::parse_bench_family(f));
    }
    cfg.sizes = j.value("sizes", std::vector<std::size_t>{});
    cfg.seeds = j.value("seeds", std::vector<std::uint64_t>{});
    for (const auto& r : j.value("regimes", nlohmann::json::array())) {
      cfg.regimes.push_back(detail::parse_regime(r));
    }
    for (const auto& a : j.value("algorithms", nlohmann::json::array())) {
      const std::string name = a.is_string() ? a.get<std::string>() : std::to_string(a.get<int>());
      const auto alg = parse_algorithm(name);
      if (!alg) throw Error(ErrorCode::kInvalidParams, "unknown algorithm '" + name + "'");
      cfg.algorithms.push_back(*alg);
    }
    cfg.budget.max_vertices = j.value("oracle_budget", cfg.budget.max_vertices);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSyntaxError, std::string("bench config: ") + e.what());
  }
  return cfg;
}

/// Instances in config order: families outer, then sizes, then seeds. Only
/// the random family consumes seeds; path and cycle consume sizes.
inline std::vector<BenchInstance> expand_instances(const BenchConfig& cfg) {
  std::vector<BenchInstance> out;
  for (const BenchFamily& f : cfg.families) {
    const std::string name(family_name(f.family));
    if (!detail::sized_family(f.family)) {
      BenchInstance inst{name, 0, generate(f.family, f.params), false};
      out.push_back(std::move(inst));
      continue;
    }
    const std::vector<std::size_t> sizes = cfg.sizes.empty() ? std::vector{f.params.n} : cfg.sizes;
    for (std::size_t n : sizes) {
      FamilyParams p = f.params;
      p.n = n;
      if (f.family != Family::kRandomBounded) {
        out.push_back({name + "-n" + std::to_string(n), 0, generate(f.family, p), false});
        continue;
      }
      for (std::uint64_t seed : cfg.seeds) {
        p.seed = seed;
        out.push_back({name + "-n" + std::to_string(n) + "-s" + std::to_string(seed), seed,
                       generate(f.family, p), false});
      }
    }
  }
  for (BenchInstance& inst : out) inst.isolate_free = inst.graph.isolated_vertices().empty();
  return out;
}

inline BenchResult run_bench(const BenchConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  BenchResult result;
  const auto instances = expand_instances(cfg);
  std::map<std::pair<std::size_t, std::size_t>, BenchSummaryRow> summary;
  for (std::size_t r = 0; r < cfg.regimes.size(); ++r) {
    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
      const auto bound = speeds_admissible(cfg.algorithms[a], cfg.regimes[r])
                             ? detail::proven_bound(cfg.algorithms[a], cfg.regimes[r])
                             : std::nullopt;
      summary[{r, a}] = {cfg.regimes[r].to_string(),
                         std::string(algorithm_name(cfg.algorithms[a])), 0, std::nullopt,
                         detail::bound_text(bound), 0};
    }
  }

  for (const BenchInstance& inst : instances) {
    for (std::size_t r = 0; r < cfg.regimes.size(); ++r) {
      const MachineConfig& speeds = cfg.regimes[r];
      std::optional<Rational> optimum;
      bool optimum_tried = false;
      bool over_budget = false;
      for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
        const Algorithm alg = cfg.algorithms[a];
        BenchRecord rec;
        rec.instance = inst.id;
        rec.seed = inst.seed;
        rec.n = inst.graph.order();
        rec.max_degree = inst.graph.max_degree();
        rec.speeds = speeds.to_string();
        rec.algorithm = std::string(algorithm_name(alg));
        if (!speeds_admissible(alg, speeds)) {
          rec.status = RecordStatus::kSkipped;
          rec.note = "speeds outside algorithm input regime";
          result.records.push_back(std::move(rec));
          continue;
        }
        if (inst.graph.max_degree() > speeds.m()) {
          rec.status = RecordStatus::kSkipped;
          rec.note = "max degree exceeds machine count";
          result.records.push_back(std::move(rec));
          continue;
        }
        const auto start = Clock::now();
        try {
          const Schedule s = run_algorithm(alg, inst.graph, speeds);
          rec.seconds = std::chrono::duration<double>(Clock::now() - start).count();
          rec.algorithm = s.algorithm;
          const VerifyReport check = verify_schedule(inst.graph, s, speeds);
          if (!check.ok) {
            rec.status = RecordStatus::kError;
            rec.note = std::string(to_string(check.violation)) + ": " + check.detail;
            ++result.errors;
            result.records.push_back(std::move(rec));
            continue;
          }
          rec.makespan = s.makespan;
        } catch (const Error& e) {
          rec.status = RecordStatus::kError;
          rec.note = e.what();
          ++result.errors;
          result.records.push_back(std::move(rec));
          continue;
        }
        if (!optimum_tried) {
          optimum_tried = true;
          try {
            optimum = opt_makespan(inst.graph, speeds, cfg.budget);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::kBudgetExceeded) throw;
            over_budget = true;
          }
        }
        if (over_budget) {
          rec.status = RecordStatus::kBudget;
          result.records.push_back(std::move(rec));
          continue;
        }
        rec.optimum = optimum;
        if (*optimum > 0) rec.ratio = *rec.makespan / *optimum;
        const auto bound = detail::proven_bound(alg, speeds);
        if (bound && inst.isolate_free && rec.ratio) {
          BenchSummaryRow& row = summary[{r, a}];
          ++row.checked;
          if (!row.max_ratio || *rec.ratio > *row.max_ratio) row.max_ratio = rec.ratio;
          const bool ok = bound->first ? *rec.ratio == bound->second : *rec.ratio <= bound->second;
          if (!ok) {
            rec.status = RecordStatus::kViolation;
            rec.note = "ratio bound " + detail::bound_text(bound);
            ++row.violations;
            ++result.violations;
          }
        }
        result.records.push_back(std::move(rec));
      }
    }
  }
  for (auto& [key, row] : summary) result.summary.push_back(std::move(row));
  return result;
}

/// Table text. Wall time is a column only when `timing` is set, so that
/// the default output is byte-identical across runs.
inline std::string format_bench(const BenchResult& result, bool timing) {
  std::ostringstream out;
  auto opt = [](const std::optional<Rational>& r) { return r ? format_rational(*r) : "-"; };
  out << std::left << std::setw(26) << "instance" << std::setw(6) << "seed" << std::setw(5) << "n"
      << std::setw(4) << "deg" << std::setw(18) << "speeds" << std::setw(11) << "algorithm"
      << std::setw(9) << "cmax" << std::setw(9) << "opt" << std::setw(9) << "ratio";
  if (timing) out << std::setw(11) << "seconds";
  out << "status\n";
  for (const BenchRecord& r : result.records) {
    out << std::left << std::setw(26) << r.instance << std::setw(6) << r.seed << std::setw(5) << r.n
        << std::setw(4) << r.max_degree << std::setw(18) << r.speeds << std::setw(11)
        << r.algorithm << std::setw(9) << opt(r.makespan) << std::setw(9) << opt(r.optimum)
        << std::setw(9) << opt(r.ratio);
    if (timing) out << std::setw(11) << std::fixed << std::setprecision(6) << r.seconds;
    out << to_string(r.status);
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << '\n';
  }
  out << "\nsummary\n";
  out << std::left << std::setw(18) << "speeds" << std::setw(11) << "algorithm" << std::setw(9)
      << "checked" << std::setw(11) << "max-ratio" << std::setw(11) << "bound" << "result\n";
  for (const BenchSummaryRow& s : result.summary) {
    out << std::left << std::setw(18) << s.speeds << std::setw(11) << s.algorithm << std::setw(9)
        << s.checked << std::setw(11) << opt(s.max_ratio) << std::setw(11) << s.bound
        << (s.violations ? "FAIL (" + std::to_string(s.violations) + " violations)" : "ok")
        << '\n';
  }
  out << "records " << result.records.size() << ", violations " << result.violations
      << ", errors " << result.errors << '\n';
  return out.str();
}

}  // namespace bipsched
