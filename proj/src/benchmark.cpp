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

#include "itp/benchmark.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "itp/instance_io.hpp"
#include "itp/value_range.hpp"

namespace itp {

namespace {

std::string format_number(double v) {
  if (v == kInfinity) return "inf";
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string safe_file_name(std::string name) {
  for (char& c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.') c = '_';
  }
  return name.empty() ? "instance" : name;
}

}  // namespace

BenchmarkRow run_instance(const Instance& inst, const BenchmarkConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  BenchmarkRow row;
  row.name = inst.name();
  row.m = inst.m();
  row.n = inst.n();
  row.sum_d_upper = inst.demand_hi_sum();
  try {
    const ValueRangeReport range =
        compute_value_range(inst, config.method, config.bnb, config.enumerate);
    row.best = range.best.value;
    row.worst = range.worst;
    row.worst_finite = range.worst_finite_value;
    if (range.worst_finite) {
      const WorstFiniteResult& wf = *range.worst_finite;
      row.proven_optimal = wf.proven_optimal;
      row.sum_d_shipped = wf.shipped;
      row.paradox = wf.paradox;
      row.best_found_time_s = wf.stats.best_found_seconds;
      row.method = wf.pattern ? "enum" : "bnb";
      if (!config.log_dir.empty()) {
        std::filesystem::create_directories(config.log_dir);
        std::ofstream out(config.log_dir / (safe_file_name(row.name) + ".csv"));
        write_convergence_csv(out, wf.log);
      }
    } else {
      // Every scenario is feasible and the worst one ships the full demand.
      row.proven_optimal = true;
      row.sum_d_shipped = row.sum_d_upper;
      row.method = "lp";
      if (!config.log_dir.empty()) {
        const double elapsed = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - start).count();
        std::filesystem::create_directories(config.log_dir);
        std::ofstream out(config.log_dir / (safe_file_name(row.name) + ".csv"));
        write_convergence_csv(out, {{elapsed, row.worst, row.worst, 0}});
      }
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.total_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

BenchmarkReport run_benchmark(const std::vector<Instance>& instances,
                              const BenchmarkConfig& config) {
  BenchmarkReport report;
  for (const Instance& inst : instances) report.rows.push_back(run_instance(inst, config));
  return report;
}

BenchmarkReport run_benchmark_dir(const std::filesystem::path& dir,
                                  const BenchmarkConfig& config) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(Errc::kIoError, dir.string() + " is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  BenchmarkReport report;
  for (const auto& file : files) {
    try {
      const Instance inst = read_instance(file);
      BenchmarkRow row = run_instance(inst, config);
      if (row.name.empty()) row.name = file.stem().string();
      report.rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      BenchmarkRow row;
      row.name = file.stem().string();
      row.error = e.what();
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

void write_report_csv(std::ostream& os, const BenchmarkReport& report) {
  os << "name,m,n,best,worst,worst_finite,proven_optimal,sum_d_shipped,"
        "sum_d_upper,paradox_flag,best_found_time_s,total_time_s,method,error\n";
  for (const BenchmarkRow& r : report.rows) {
    os << csv_field(r.name) << ',' << r.m << ',' << r.n << ',' << format_number(r.best)
       << ',' << format_number(r.worst) << ',' << format_number(r.worst_finite) << ','
       << (r.proven_optimal ? 1 : 0) << ',' << format_number(r.sum_d_shipped) << ','
       << format_number(r.sum_d_upper) << ',' << (r.paradox ? 1 : 0) << ','
       << format_number(r.best_found_time_s) << ',' << format_number(r.total_time_s)
       << ',' << r.method << ',' << csv_field(r.error) << '\n';
  }
}

void write_report_table(std::ostream& os, const BenchmarkReport& report) {
  const std::vector<std::string> head = {"name",  "m",      "n",        "best",
                                         "worst", "f_fin",  "sum_d",    "sum_d_hi",
                                         "found_s", "total_s"};
  std::vector<std::vector<std::string>> cells;
  for (const BenchmarkRow& r : report.rows) {
    if (!r.error.empty()) {
      cells.push_back({r.name, std::to_string(r.m), std::to_string(r.n), "error: " + r.error});
      continue;
    }
    std::ostringstream t1, t2;
    t1 << std::fixed << std::setprecision(2) << r.best_found_time_s;
    t2 << std::fixed << std::setprecision(2) << r.total_time_s;
    cells.push_back({r.name, std::to_string(r.m), std::to_string(r.n),
                     format_number(r.best), format_number(r.worst),
                     format_number(r.worst_finite) + (r.proven_optimal ? "" : "*"),
                     format_number(r.sum_d_shipped), format_number(r.sum_d_upper),
                     t1.str(), t2.str()});
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) width[c] = head[c].size();
  for (const auto& row : cells) {
    if (row.size() != head.size()) continue;
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      if (c == 0) {
        os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      } else if (c < width.size() && row.size() == head.size()) {
        os << std::right << std::setw(static_cast<int>(width[c])) << row[c];
      } else {
        os << row[c];
      }
    }
    os << std::right << '\n';
  };
  emit(head);
  for (const auto& row : cells) emit(row);
  bool any_open = false;
  for (const BenchmarkRow& r : report.rows) any_open |= r.error.empty() && !r.proven_optimal;
  if (any_open) os << "* not proven optimal within the limits\n";
}

}  // namespace itp
