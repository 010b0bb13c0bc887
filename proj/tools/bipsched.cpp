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

// bipsched: generate instances, solve, verify and benchmark.
//
// Exit codes: 0 ok, 1 infeasible schedule or violated ratio bound,
// 2 usage, parse or precondition error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bipsched.hpp"

namespace {

using namespace bipsched;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidParams, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidParams, "cannot write '" + path + "'");
  out << text;
}

MachineConfig speeds_with_notice(const std::string& text) {
  MachineConfig cfg = MachineConfig::parse(text);
  if (cfg.was_reordered()) {
    std::cerr << "notice: speeds reordered to " << cfg.to_string() << '\n';
  }
  return cfg;
}

// Failures that mean "the input cannot be scheduled as asked" rather than
// "the input is malformed".
bool is_infeasibility(ErrorCode code) {
  return code == ErrorCode::kEquitableInfeasible || code == ErrorCode::kInternalExhaustion;
}

struct GenArgs {
  std::string family;
  FamilyParams params;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  const auto family = parse_family(a.family);
  if (!family) throw Error(ErrorCode::kInvalidParams, "unknown family '" + a.family + "'");
  const BipartiteGraph g = generate(*family, a.params);
  write_output(a.out, serialize_graph(g));
  std::ostream& info = (a.out.empty() || a.out == "-") ? std::cerr : std::cout;
  info << "n " << g.order() << " m " << g.size() << " max-degree " << g.max_degree() << '\n';
  return kOk;
}

struct SolveArgs {
  std::string graph;
  std::string speeds;
  std::string alg;
  bool oracle = false;
  std::size_t budget = OracleBudget{}.max_vertices;
  std::string gantt;
  std::string out;
};

int cmd_solve(const SolveArgs& a) {
  const BipartiteGraph g = parse_graph(read_file(a.graph));
  const MachineConfig cfg = speeds_with_notice(a.speeds);
  const auto alg = parse_algorithm(a.alg);
  if (!alg) throw Error(ErrorCode::kInvalidParams, "unknown algorithm '" + a.alg + "'");
  const Schedule s = run_algorithm(*alg, g, cfg);

  const VerifyReport check = verify_schedule(g, s, cfg);
  if (!check.ok) {
    std::cerr << "error: produced schedule failed verification: " << to_string(check.violation)
              << ": " << check.detail << '\n';
    return kFailed;
  }

  std::optional<Rational> optimum;
  std::string optimum_note;
  if (a.oracle) {
    try {
      optimum = opt_makespan(g, cfg, {.max_vertices = a.budget});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      optimum_note = e.what();
    }
  }
  const SolveReport report = make_report(s, g.order(), cfg, optimum);

  std::ostringstream text;
  text << serialize_schedule(s, cfg);
  text << "# ideal " << format_rational(report.ideal_length) << '\n';
  if (report.optimum) {
    text << "# optimum " << format_rational(*report.optimum) << '\n';
    text << "# ratio " << format_rational(*report.ratio) << '\n';
  } else if (!optimum_note.empty()) {
    text << "# optimum unavailable (" << optimum_note << ")\n";
  }
  write_output(a.out, text.str());
  if (!a.gantt.empty()) write_output(a.gantt, gantt_svg(s, cfg, report.ideal_length));
  return kOk;
}

struct VerifyArgs {
  std::string graph;
  std::string schedule;
  std::string speeds;
};

int cmd_verify(const VerifyArgs& a) {
  const BipartiteGraph g = parse_graph(read_file(a.graph));
  const ParsedSchedule parsed = parse_schedule(read_file(a.schedule));
  std::optional<MachineConfig> cfg;
  if (!a.speeds.empty()) {
    cfg.emplace(speeds_with_notice(a.speeds));
  } else if (!parsed.speeds.empty()) {
    cfg.emplace(parsed.speeds);
  } else {
    throw Error(ErrorCode::kInvalidParams, "no speeds: pass --speeds or a 'speeds' line");
  }
  const VerifyReport report = verify_schedule(g, parsed.schedule, *cfg);
  if (report.ok) {
    std::cout << "PASS makespan " << format_rational(parsed.schedule.makespan) << '\n';
    return kOk;
  }
  std::cout << "FAIL " << to_string(report.violation) << ": " << report.detail << '\n';
  return kFailed;
}

struct BenchArgs {
  std::string config;
  std::optional<std::size_t> budget;
  bool timing = false;
  std::string out;
};

int cmd_bench(const BenchArgs& a) {
  BenchConfig cfg = parse_bench_config(read_file(a.config));
  if (a.budget) cfg.budget.max_vertices = *a.budget;
  const BenchResult result = run_bench(cfg);
  write_output(a.out, format_bench(result, a.timing));
  return (result.violations || result.errors) ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unit-job scheduling on uniform machines with bipartite conflicts"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph file");
  gen_cmd->add_option("family", gen.family,
                      "star-forest | k33-pendants | double-star | path | cycle | "
                      "complete-bipartite | random")
      ->required();
  gen_cmd->add_option("--n", gen.params.n, "Vertex count (path, cycle, random)");
  gen_cmd->add_option("--stars", gen.params.stars, "Number of stars");
  gen_cmd->add_option("--leaves", gen.params.leaves, "Leaves per star");
  gen_cmd->add_option("--a", gen.params.a, "First part size (double-star, complete-bipartite)");
  gen_cmd->add_option("--b", gen.params.b, "Second part size (double-star, complete-bipartite)");
  gen_cmd->add_option("--pendants", gen.params.pendants, "Pendant bit pattern for k33-pendants");
  gen_cmd->add_option("--max-deg", gen.params.max_degree, "Degree cap (random)");
  gen_cmd->add_option("--density", gen.params.density, "Edge density in [0, 1] (random)");
  gen_cmd->add_option("--seed", gen.params.seed, "Seed (random)");
  gen_cmd->add_flag("--isolate-free", gen.params.isolate_free, "Attach isolated vertices");
  gen_cmd->add_option("-o,--out", gen.out, "Output path (default stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Schedule a graph file");
  solve_cmd->add_option("graph", solve.graph, "Graph file")->required();
  solve_cmd->add_option("--speeds", solve.speeds, "Comma-separated rationals, e.g. 12,1,1,1")
      ->required();
  solve_cmd->add_option("--alg", solve.alg, "1 | 2 | 3 | 4 | auto-m")->required();
  solve_cmd->add_flag("--oracle", solve.oracle, "Also compute the exact optimum and the ratio");
  solve_cmd->add_option("--budget", solve.budget, "Oracle vertex budget");
  solve_cmd->add_option("--gantt", solve.gantt, "Write an SVG Gantt chart to this path");
  solve_cmd->add_option("-o,--out", solve.out, "Output path (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a schedule file against a graph");
  verify_cmd->add_option("graph", verify.graph, "Graph file")->required();
  verify_cmd->add_option("schedule", verify.schedule, "Schedule file")->required();
  verify_cmd->add_option("--speeds", verify.speeds, "Override the speeds in the schedule file");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a ratio benchmark from a JSON config");
  bench_cmd->add_option("config", bench.config, "Config file")->required();
  bench_cmd->add_option("--budget", bench.budget, "Override the oracle vertex budget");
  bench_cmd->add_flag("--timing", bench.timing, "Add a wall-time column");
  bench_cmd->add_option("-o,--out", bench.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*solve_cmd) return cmd_solve(solve);
    if (*verify_cmd) return cmd_verify(verify);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_infeasibility(e.code()) ? kFailed : kUsage;
  }
  return kUsage;
}
