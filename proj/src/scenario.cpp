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

#include "itp/scenario.hpp"

namespace itp {

lp::LpProblem TransportLp::build() const {
  const int m = cost.rows();
  const int n = cost.cols();
  lp::LpProblem p(lp::Sense::kMinimize);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool is_free = !free_pair.empty() && free_pair[i * n + j];
      p.add_variable(is_free ? -lp::kInf : 0.0, lp::kInf, cost(i, j),
                     "x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  }
  for (int i = 0; i < m; ++i) {
    std::vector<lp::Entry> row;
    row.reserve(n);
    for (int j = 0; j < n; ++j) row.push_back({i * n + j, 1.0});
    const bool dropped = !drop_supply.empty() && drop_supply[i];
    // Keep a free row for dropped sources so row indices stay aligned.
    const auto rel =
        mode == Mode::kSupplyEq ? lp::Relation::kEqual : lp::Relation::kLessEqual;
    if (dropped) {
      p.add_range_row(std::move(row), -lp::kInf, lp::kInf,
                      "supply_" + std::to_string(i + 1));
    } else {
      p.add_row(std::move(row), rel, supply[i],
                "supply_" + std::to_string(i + 1));
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<lp::Entry> row;
    row.reserve(m);
    for (int i = 0; i < m; ++i) row.push_back({i * n + j, 1.0});
    p.add_row(std::move(row), demand_relation, demand[j],
              "demand_" + std::to_string(j + 1));
  }
  return p;
}

ScenarioSolution solve_transport(const TransportLp& t,
                                 lp::Arithmetic arithmetic) {
  const int m = t.cost.rows();
  const int n = t.cost.cols();
  const lp::LpOutcome out = lp::solve_lp(t.build(), arithmetic);
  ScenarioSolution sol;
  sol.status = out.status;
  if (out.status != lp::Status::kOptimal) return sol;
  sol.value = out.value;
  sol.plan = TransportPlan(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) sol.plan(i, j) = out.primal[i * n + j];
  sol.duals.u.assign(out.duals.begin(), out.duals.begin() + m);
  sol.duals.v.assign(out.duals.begin() + m, out.duals.end());
  for (int i = 0; i < m; ++i) {
    if (!t.drop_supply.empty() && t.drop_supply[i]) sol.duals.u[i] = 0.0;
  }
  return sol;
}

ScenarioSolution solve_scenario(const Instance& inst, const Scenario& sc,
                                lp::Arithmetic arithmetic) {
  if (!contains_scenario(inst, sc)) {
    throw Error(Errc::kInvalidParams, "scenario lies outside the instance");
  }
  TransportLp t;
  t.mode = inst.mode();
  t.cost = sc.cost;
  t.supply = sc.supply;
  t.demand = sc.demand;
  return solve_transport(t, arithmetic);
}

Scenario corner_scenario(const Instance& inst, bool cost_hi, bool supply_hi,
                         bool demand_hi) {
  Scenario sc;
  sc.cost = cost_hi ? inst.cost_hi() : inst.cost_lo();
  sc.supply = supply_hi ? inst.supply_hi() : inst.supply_lo();
  sc.demand = demand_hi ? inst.demand_hi() : inst.demand_lo();
  return sc;
}

}  // namespace itp
