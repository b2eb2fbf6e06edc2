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

// Range of scenario optimal values: the best value, the worst value (which is
// infinite unless every scenario is feasible), and the worst value over
// feasible scenarios when supply and demand are fixed.

#ifndef ITP_VALUE_RANGE_HPP_
#define ITP_VALUE_RANGE_HPP_

#include <limits>
#include <optional>

#include "itp/core.hpp"
#include "itp/lp.hpp"
#include "itp/scenario.hpp"
#include "itp/worst_finite.hpp"

namespace itp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct BestValue {
  double value = 0.0;
  Scenario scenario;  // witness with c at its lower bounds
  TransportPlan plan;
};

// Throws Error{kNotWeaklyFeasible}.
BestValue best_optimal_value(const Instance& inst,
                             lp::Arithmetic arithmetic = lp::Arithmetic::kFloat);

// kInfinity unless the problem is strongly feasible.
double worst_optimal_value(const Instance& inst,
                           lp::Arithmetic arithmetic = lp::Arithmetic::kFloat);

// Worst finite value for point supplies and demands, solved directly on the
// dual side. Throws Error{kRhsNotFixed | kInfeasibleScenario}.
double worst_finite_fixed_rhs(const Instance& inst,
                              lp::Arithmetic arithmetic = lp::Arithmetic::kFloat);

// Greedy scenario that ships as much as possible at the upper costs; its
// optimal value is a lower bound on the worst finite value.
struct InitialScenario {
  Scenario scenario;
  ScenarioSolution solution;
  double g = 0.0;  // min(sum of upper supplies, sum of upper demands)
};

// Throws Error{kNotWeaklyFeasible}.
InitialScenario initial_scenario(const Instance& inst);

// Supply and demand of the greedy scenario, without solving it.
void initial_rhs(const Instance& inst, std::vector<double>* supply,
                 std::vector<double>* demand, double* g);

struct ValueRangeReport {
  BestValue best;
  double worst = kInfinity;
  // Filled when the worst value is infinite; otherwise the worst value is
  // also the worst finite value and is copied here.
  std::optional<WorstFiniteResult> worst_finite;
  double worst_finite_value = kInfinity;
};

// Throws Error{kNotWeaklyFeasible}.
ValueRangeReport compute_value_range(
    const Instance& inst, WorstFiniteMethod method = WorstFiniteMethod::kAuto,
    const BnbConfig& bnb = {}, const EnumerateOptions& enumerate = {});

}  // namespace itp

#endif  // ITP_VALUE_RANGE_HPP_
