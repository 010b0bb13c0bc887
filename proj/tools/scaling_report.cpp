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

// Wall time of each algorithm against n on random graphs with maximum
// degree 4. Informational only: nothing here is asserted.
//
//   scaling_report [max_n] [seeds]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <vector>

#include "bipsched.hpp"

int main(int argc, char** argv) {
  using namespace bipsched;
  using Clock = std::chrono::steady_clock;
  const std::size_t max_n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 100'000;
  const std::uint64_t seeds = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 3;

  struct Run {
    Algorithm alg;
    const char* speeds;
  };
  const std::vector<Run> runs = {{Algorithm::kAlg1, "12,1,1,1"},
                                 {Algorithm::kAlg2, "9,4,1,1"},
                                 {Algorithm::kAlg3, "3,3,1,1"},
                                 {Algorithm::kAlg4, "6,6,2,2"},
                                 {Algorithm::kWideGapM, "30,1,1,1,1"}};

  std::cout << std::left << std::setw(10) << "n" << std::setw(10) << "edges" << std::setw(12)
            << "algorithm" << std::setw(14) << "mean-ms" << "ms-per-1k-jobs\n";
  for (std::size_t n = 1000; n <= max_n; n *= 10) {
    for (const Run& run : runs) {
      const MachineConfig cfg = MachineConfig::parse(run.speeds);
      double total = 0.0;
      std::size_t edges = 0;
      for (std::uint64_t seed = 0; seed < seeds; ++seed) {
        const BipartiteGraph g = random_bounded(n, 4, 0.9, seed, true);
        edges += g.size();
        const auto start = Clock::now();
        const Schedule s = run_algorithm(run.alg, g, cfg);
        total += std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (!verify_schedule(g, s, cfg).ok) {
          std::cerr << "infeasible schedule at n=" << n << " seed=" << seed << '\n';
          return 1;
        }
      }
      const double mean = total / static_cast<double>(seeds);
      std::cout << std::left << std::setw(10) << n << std::setw(10) << edges / seeds
                << std::setw(12) << algorithm_name(run.alg) << std::setw(14) << std::fixed
                << std::setprecision(3) << mean << mean * 1000.0 / static_cast<double>(n)
                << '\n';
    }
  }
  return 0;
}
