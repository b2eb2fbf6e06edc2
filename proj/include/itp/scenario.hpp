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

#ifndef ITP_SCENARIO_HPP_
#define ITP_SCENARIO_HPP_

#include <span>
#include <vector>

#include "itp/core.hpp"
#include "itp/lp.hpp"

namespace itp {

struct ScenarioSolution {
  TransportPlan plan;
  DualPair duals;
  double value = 0.0;
  lp::Status status = lp::Status::kInfeasible;

  bool optimal() const { return status == lp::Status::kOptimal; }
};

// A transportation LP  min sum c_ij x_ij  over the supply and demand rows,
// with optional restrictions used by the worst-value search:
//   - free_pair[i*n+j]: x_ij is not sign constrained,
//   - drop_supply[i]:   the supply row of source i is omitted (u_i = 0),
//   - demand_relation:  '=' for a scenario, '>=' for the dual bound LP.
struct TransportLp {
  Mode mode = Mode::kSupplyLeq;
  Matrix cost;
  std::vector<double> supply;
  std::vector<double> demand;
  lp::Relation demand_relation = lp::Relation::kEqual;
  std::vector<char> free_pair;
  std::vector<char> drop_supply;

  lp::LpProblem build() const;
};

// Solves the LP and maps row duals to (u, v) with the sign convention of the
// transportation dual: u_i <= 0 on supply rows in <= mode, v free.
ScenarioSolution solve_transport(const TransportLp& t,
                                 lp::Arithmetic arithmetic = lp::Arithmetic::kFloat);

// Optimal plan and duals of one scenario. Status is Infeasible exactly when
// the scenario's total supply cannot cover its demand.
ScenarioSolution solve_scenario(const Instance& inst, const Scenario& sc,
                                lp::Arithmetic arithmetic = lp::Arithmetic::kFloat);

// Scenario with every coefficient at the given end of its interval.
Scenario corner_scenario(const Instance& inst, bool cost_hi, bool supply_hi,
                         bool demand_hi);

}  // namespace itp

#endif  // ITP_SCENARIO_HPP_
