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

// Worst finite optimal value: the largest scenario optimum over scenarios that
// admit a feasible plan.
//
// Both engines search over complementary-slackness patterns at the upper
// costs. A pattern fixes, for every route, whether x_ij = 0 or its dual row
// is tight, and (supply <= mode only) for every source, whether u_i = 0 or the
// source ships at least its lower supply. Each pattern splits into an x-part
// (maximize the upper cost of x) and a dual feasibility part.
//
// worst_finite_enumerate visits all patterns in exact arithmetic and serves as
// the reference; worst_finite_bnb branches on violated implications.

#ifndef ITP_WORST_FINITE_HPP_
#define ITP_WORST_FINITE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "itp/core.hpp"

namespace itp {

// K: pairs with x_ij = 0 (dual row may be slack); the rest have tight dual
// rows. L: sources with sum_j x_ij >= lower supply and u_i <= 0; the rest
// have u_i = 0. L is empty in supply-equality mode.
struct ComplementarityPattern {
  std::vector<char> zero_pairs;     // m*n, row-major
  std::vector<char> slack_sources;  // m
};

struct ConvergencePoint {
  double elapsed_seconds = 0.0;
  double incumbent = 0.0;
  double upper_bound = 0.0;
  std::int64_t nodes = 0;
};

struct WorstFiniteStats {
  std::int64_t nodes = 0;  // B&B nodes, or patterns for the enumeration
  std::int64_t lp_solves = 0;
  double wall_seconds = 0.0;
  double best_found_seconds = 0.0;
};

struct WorstFiniteResult {
  bool has_incumbent = false;
  double value = 0.0;
  double upper_bound = 0.0;
  bool proven_optimal = false;
  TransportPlan plan;
  DualPair duals;
  Scenario scenario;
  std::optional<ComplementarityPattern> pattern;  // enumeration only
  WorstFiniteStats stats;
  std::vector<ConvergencePoint> log;
  // Total shipped by the worst plan versus the largest possible demand; a
  // strict shortfall means more demand would be served more cheaply.
  double shipped = 0.0;
  double demand_upper = 0.0;
  bool paradox = false;
};

struct EnumerateOptions {
  int max_bits = 16;  // patterns are 2^bits; bits = m*n (+ m in <= mode)
  int threads = 0;    // 1 runs the serial reference loop
};

// Exact reference. Throws Error{kInstanceTooLarge | kNotWeaklyFeasible}.
WorstFiniteResult worst_finite_enumerate(const Instance& inst,
                                         const EnumerateOptions& options = {});

enum class NodeOrder { kBestBound, kDepthFirst };

struct BnbConfig {
  double time_limit = 1500.0;  // seconds; <= 0 disables
  double gap_tol = 1e-6;       // relative pruning tolerance
  NodeOrder node_order = NodeOrder::kBestBound;
  std::int64_t node_limit = 0;  // <= 0 disables
  int threads = 1;              // <= 0 uses default_threads()
  // Violation threshold for the implications x_ij > 0 => tight dual row and
  // sum_j x_ij < lower supply => u_i = 0.
  double violation_tol = 1e-7;
};

// Throws Error{kNotWeaklyFeasible}. Hitting a limit is not an error: the
// result then carries the incumbent with proven_optimal = false.
WorstFiniteResult worst_finite_bnb(const Instance& inst,
                                   const BnbConfig& config = {});

enum class WorstFiniteMethod { kAuto, kBnb, kEnumerate };

// kAuto enumerates when the pattern count fits enumerate.max_bits and runs the
// branch-and-bound otherwise.
WorstFiniteResult solve_worst_finite(const Instance& inst, WorstFiniteMethod method,
                                     const BnbConfig& bnb = {},
                                     const EnumerateOptions& enumerate = {});

// Number of pattern bits: m*n, plus m in supply <= mode.
int pattern_bits(const Instance& inst);

// Scenario at which the incumbent plan is optimal: costs at their upper
// bounds, demand equal to the shipped column sums, supply equal to the row
// sums raised to the lower supply. Throws Error{kNoIncumbent}.
Scenario extract_worst_scenario(const Instance& inst,
                                const WorstFiniteResult& result);

// Columns elapsed_seconds,incumbent_value,upper_bound,nodes_explored.
void write_convergence_csv(std::ostream& os,
                           const std::vector<ConvergencePoint>& log);

// Residual of the incumbent against the pattern system at upper costs:
// primal rows, dual rows, and both implication families. Zero for an exact
// certificate.
double certificate_violation(const Instance& inst, const WorstFiniteResult& r);

}  // namespace itp

#endif  // ITP_WORST_FINITE_HPP_
