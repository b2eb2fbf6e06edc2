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

// Command-line front end.
//
// Exit status: 0 success, 1 usage error, 2 instance error, 3 numerical
// failure inside a solver.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "itp/benchmark.hpp"
#include "itp/generator.hpp"
#include "itp/instance_io.hpp"
#include "itp/milp_export.hpp"
#include "itp/properties.hpp"
#include "itp/value_range.hpp"
#include "itp/worst_finite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInstance = 2;
constexpr int kExitNumerical = 3;

int exit_code_for(itp::Errc code) {
  switch (code) {
    case itp::Errc::kNumericalFailure:
    case itp::Errc::kInvalidProblem:
      return kExitNumerical;
    case itp::Errc::kInvalidParams:
      return kExitUsage;
    default:
      return kExitInstance;
  }
}

std::string fmt(double v) {
  if (v == itp::kInfinity) return "inf";
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

void print_vector(std::ostream& os, const char* label, const std::vector<double>& v) {
  os << label << " =";
  for (double x : v) os << ' ' << fmt(x);
  os << '\n';
}

void print_matrix(std::ostream& os, const char* label, const itp::Matrix& x) {
  os << label << ":\n";
  for (int i = 0; i < x.rows(); ++i) {
    os << "  ";
    for (int j = 0; j < x.cols(); ++j) os << (j ? " " : "") << fmt(x(i, j));
    os << '\n';
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
  std::string file;
  std::string solution;
  std::string property;
  int max_free = 20;
  std::string method = "auto";
  double time_limit = 1500.0;
  long long node_limit = 0;
  std::string node_order = "best";
  int threads = 0;
  std::string log;
  std::string dump_lp;
  int m = 0;
  int n = 0;
  unsigned long long seed = 1;
  bool doubling = true;
  std::string mode = "le";
  std::string out;
  std::string source;
  std::string report;
  std::string log_dir;
};

itp::WorstFiniteMethod parse_method(const std::string& s) {
  if (s == "bnb") return itp::WorstFiniteMethod::kBnb;
  if (s == "enum") return itp::WorstFiniteMethod::kEnumerate;
  return itp::WorstFiniteMethod::kAuto;
}

itp::BnbConfig bnb_config(const Options& o) {
  itp::BnbConfig c;
  c.time_limit = o.time_limit;
  c.node_limit = o.node_limit;
  c.threads = o.threads;
  c.node_order = o.node_order == "depth" ? itp::NodeOrder::kDepthFirst
                                         : itp::NodeOrder::kBestBound;
  return c;
}

int run_check(const Options& o) {
  const itp::Instance inst = itp::read_instance(o.file);
  if (o.solution.empty()) {
    std::cout << "weakly feasible problem: " << yes_no(itp::weak_feasible_problem(inst)) << '\n'
              << "strongly feasible problem: " << yes_no(itp::strong_feasible_problem(inst)) << '\n'
              << "weakly optimal problem: " << yes_no(itp::weak_optimal_problem(inst)) << '\n'
              << "strongly optimal problem: " << yes_no(itp::strong_optimal_problem(inst)) << '\n';
    return kExitOk;
  }
  const itp::TransportPlan x = itp::read_solution(o.solution, inst.m(), inst.n());
  const bool all = o.property.empty();
  if (all || o.property == "weakfeas") {
    std::cout << "weakly feasible solution: " << yes_no(itp::weak_feasible_solution(inst, x)) << '\n';
  }
  if (all || o.property == "strongfeas") {
    std::cout << "strongly feasible solution: " << yes_no(itp::strong_feasible_solution(inst, x))
              << '\n';
  }
  if (all || o.property == "weakopt") {
    const auto cert = itp::weak_optimal_solution(inst, x);
    std::cout << "weakly optimal solution: " << yes_no(cert.has_value()) << '\n';
    if (cert) {
      print_matrix(std::cout, "witness cost", cert->scenario.cost);
      print_vector(std::cout, "witness supply", cert->scenario.supply);
      print_vector(std::cout, "witness demand", cert->scenario.demand);
      print_vector(std::cout, "u", cert->duals.u);
      print_vector(std::cout, "v", cert->duals.v);
    }
  }
  if (all || o.property == "strongopt") {
    bool strong = false;
    if (inst.costs_fixed()) {
      strong = itp::strong_optimal_solution_fixed_cost(inst, x);
    } else {
      itp::StrongOptOptions opt;
      opt.max_free_vars = o.max_free;
      opt.threads = o.threads;
      strong = itp::strong_optimal_solution_general(inst, x, opt);
    }
    std::cout << "strongly optimal solution: " << yes_no(strong) << '\n';
  }
  return kExitOk;
}

void print_worst_finite(const itp::WorstFiniteResult& r) {
  std::cout << "worst finite value: " << fmt(r.value) << (r.proven_optimal ? "" : "*") << '\n'
            << "upper bound: " << fmt(r.upper_bound) << '\n'
            << "proven optimal: " << yes_no(r.proven_optimal) << '\n'
            << "shipped: " << fmt(r.shipped) << " of at most " << fmt(r.demand_upper)
            << (r.paradox ? " (paradox)" : "") << '\n'
            << "nodes: " << r.stats.nodes << "  lp solves: " << r.stats.lp_solves
            << "  time: " << fmt(r.stats.wall_seconds) << " s"
            << "  best found at: " << fmt(r.stats.best_found_seconds) << " s\n";
  print_vector(std::cout, "worst supply", r.scenario.supply);
  print_vector(std::cout, "worst demand", r.scenario.demand);
  print_matrix(std::cout, "plan", r.plan);
}

int run_range(const Options& o) {
  const itp::Instance inst = itp::read_instance(o.file);
  itp::EnumerateOptions eo;
  eo.threads = o.threads;
  const itp::ValueRangeReport r =
      itp::compute_value_range(inst, parse_method(o.method), bnb_config(o), eo);
  const bool proven = !r.worst_finite || r.worst_finite->proven_optimal;
  std::cout << "best: " << fmt(r.best.value) << '\n'
            << "worst: " << fmt(r.worst) << '\n'
            << "worst finite: " << fmt(r.worst_finite_value) << (proven ? "" : "*") << '\n';
  return kExitOk;
}

int run_worst_finite(const Options& o) {
  const itp::Instance inst = itp::read_instance(o.file);
  if (!o.dump_lp.empty()) {
    std::ofstream out(o.dump_lp);
    if (!out) throw itp::Error(itp::Errc::kIoError, "cannot write " + o.dump_lp);
    itp::write_big_m_model(out, inst);
  }
  itp::EnumerateOptions eo;
  eo.threads = o.threads;
  const itp::WorstFiniteResult r =
      itp::solve_worst_finite(inst, parse_method(o.method), bnb_config(o), eo);
  if (!o.log.empty()) {
    std::ofstream out(o.log);
    if (!out) throw itp::Error(itp::Errc::kIoError, "cannot write " + o.log);
    itp::write_convergence_csv(out, r.log);
  }
  print_worst_finite(r);
  return kExitOk;
}

int run_gen(const Options& o) {
  itp::GeneratorParams params;
  params.doubling = o.doubling;
  params.mode = o.mode == "eq" ? itp::Mode::kSupplyEq : itp::Mode::kSupplyLeq;
  const itp::Instance inst = itp::generate_instance(o.m, o.n, o.seed, params);
  if (o.out.empty()) {
    itp::write_instance(std::cout, inst);
  } else {
    itp::write_instance(std::filesystem::path(o.out), inst);
  }
  return kExitOk;
}

int run_bench(const Options& o) {
  itp::BenchmarkConfig config;
  config.method = parse_method(o.method);
  config.bnb = bnb_config(o);
  config.enumerate.threads = o.threads;
  config.log_dir = o.log_dir;
  itp::BenchmarkReport report;
  if (o.source.rfind("gen:", 0) == 0) {
    const itp::GeneratorSpec spec = itp::parse_generator_spec(o.source.substr(4));
    std::vector<itp::Instance> instances;
    for (int k = 0; k < spec.count; ++k) {
      instances.push_back(itp::generate_instance(spec.m, spec.n, spec.seed + k));
    }
    report = itp::run_benchmark(instances, config);
  } else {
    report = itp::run_benchmark_dir(o.source, config);
  }
  if (!o.report.empty()) {
    std::ofstream out(o.report);
    if (!out) throw itp::Error(itp::Errc::kIoError, "cannot write " + o.report);
    itp::write_report_csv(out, report);
  }
  itp::write_report_table(std::cout, report);
  return kExitOk;
}

void add_search_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--method", o.method, "bnb, enum or auto")
      ->check(CLI::IsMember({"bnb", "enum", "auto"}));
  cmd->add_option("--time-limit", o.time_limit, "seconds for the branch-and-bound");
  cmd->add_option("--node-limit", o.node_limit, "node cap for the branch-and-bound");
  cmd->add_option("--node-order", o.node_order, "best or depth")
      ->check(CLI::IsMember({"best", "depth"}));
  cmd->add_option("--threads", o.threads, "worker threads (0: automatic)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval transportation problem toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "feasibility and optimality checks");
  check->add_option("file", o.file, "instance JSON")->required()->check(CLI::ExistingFile);
  check->add_option("--solution", o.solution, "plan JSON (m x n array)")->check(CLI::ExistingFile);
  check->add_option("--property", o.property, "weakfeas, strongfeas, weakopt or strongopt")
      ->check(CLI::IsMember({"weakfeas", "strongfeas", "weakopt", "strongopt"}));
  check->add_option("--max-free", o.max_free, "cap on sign-split variables");
  check->add_option("--threads", o.threads, "worker threads (0: automatic)");

  auto* range = app.add_subcommand("range", "best, worst and worst finite optimal values");
  range->add_option("file", o.file, "instance JSON")->required()->check(CLI::ExistingFile);
  add_search_options(range, o);

  auto* worst = app.add_subcommand("worst-finite", "worst finite optimal value");
  worst->add_option("file", o.file, "instance JSON")->required()->check(CLI::ExistingFile);
  add_search_options(worst, o);
  worst->add_option("--log", o.log, "convergence CSV output");
  worst->add_option("--dump-lp", o.dump_lp, "write the big-M model in LP format");

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--m", o.m, "sources")->required()->check(CLI::PositiveNumber);
  gen->add_option("--n", o.n, "destinations")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_flag("--doubling,!--no-doubling", o.doubling,
                "upper bounds twice the lower ones, balanced totals (default on)");
  gen->add_option("--mode", o.mode, "le or eq")->check(CLI::IsMember({"le", "eq"}));
  gen->add_option("--out", o.out, "output file (default: stdout)");

  auto* bench = app.add_subcommand("bench", "run a benchmark over many instances");
  bench->add_option("source", o.source, "directory of instances or gen:MxN:seed[:count]")
      ->required();
  bench->add_option("--report", o.report, "CSV report output");
  bench->add_option("--log-dir", o.log_dir, "directory for convergence CSVs");
  add_search_options(bench, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return run_check(o);
    if (*range) return run_range(o);
    if (*worst) return run_worst_finite(o);
    if (*gen) return run_gen(o);
    if (*bench) return run_bench(o);
  } catch (const itp::Error& e) {
    std::cerr << "itp: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "itp: " << e.what() << '\n';
    return kExitInstance;
  }
  return kExitUsage;
}
