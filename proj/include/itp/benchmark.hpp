// Copyright 2026 The ITP Toolkit Authors
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

#ifndef ITP_BENCHMARK_HPP_
#define ITP_BENCHMARK_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "itp/core.hpp"
#include "itp/worst_finite.hpp"

namespace itp {

struct BenchmarkConfig {
  WorstFiniteMethod method = WorstFiniteMethod::kAuto;
  BnbConfig bnb;
  EnumerateOptions enumerate;
  // When set, one convergence CSV per instance is written here.
  std::filesystem::path log_dir;
};

struct BenchmarkRow {
  std::string name;
  int m = 0;
  int n = 0;
  double best = 0.0;
  double worst = 0.0;
  double worst_finite = 0.0;
  bool proven_optimal = false;
  double sum_d_shipped = 0.0;
  double sum_d_upper = 0.0;
  bool paradox = false;
  double best_found_time_s = 0.0;
  double total_time_s = 0.0;
  std::string method;
  std::string error;  // non-empty when the instance failed
};

struct BenchmarkReport {
  std::vector<BenchmarkRow> rows;
};

BenchmarkRow run_instance(const Instance& inst, const BenchmarkConfig& config);

// Per-instance failures are recorded in the row and do not stop the run.
BenchmarkReport run_benchmark(const std::vector<Instance>& instances,
                              const BenchmarkConfig& config);

// All *.json files of a directory, sorted by file name. Unreadable files
// become rows carrying the error.
BenchmarkReport run_benchmark_dir(const std::filesystem::path& dir,
                                  const BenchmarkConfig& config);

void write_report_csv(std::ostream& os, const BenchmarkReport& report);
// Right-aligned numeric columns; values not proven optimal get a '*'.
void write_report_table(std::ostream& os, const BenchmarkReport& report);

}  // namespace itp

#endif  // ITP_BENCHMARK_HPP_
