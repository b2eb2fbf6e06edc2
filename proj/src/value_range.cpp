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

#include "itp/value_range.hpp"

#include <algorithm>

#include "itp/properties.hpp"

namespace itp {

namespace {

void require_weakly_feasible(const Instance& inst) {
  if (!weak_feasible_problem(inst)) {
    throw Error(Errc::kNotWeaklyFeasible,
                "no scenario of the instance has a feasible plan");
  }
}

}  // namespace

BestValue best_optimal_value(const Instance& inst, lp::Arithmetic arithmetic) {
  require_weakly_feasible(inst);
  const int m = inst.m();
  const int n = inst.n();
  lp::LpProblem p(lp::Sense::kMinimize);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) p.add_variable(0.0, lp::kInf, inst.cost(i, j).lo);
  for (int i = 0; i < m; ++i) {
    std::vector<lp::Entry> row;
    for (int j = 0; j < n; ++j) row.push_back({i * n + j, 1.0});
    const double lo = inst.mode() == Mode::kSupplyEq ? inst.supply(i).lo : -lp::kInf;
    p.add_range_row(std::move(row), lo, inst.supply(i).hi);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<lp::Entry> col;
    for (int i = 0; i < m; ++i) col.push_back({i * n + j, 1.0});
    p.add_range_row(std::move(col), inst.demand(j).lo, inst.demand(j).hi);
  }
  const lp::LpOutcome out = lp::solve_lp(p, arithmetic);
  if (out.status != lp::Status::kOptimal) {
    throw Error(Errc::kNumericalFailure, "best-value LP did not reach optimality");
  }
  BestValue best;
  best.value = out.value;
  best.plan = TransportPlan(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) best.plan(i, j) = std::max(0.0, out.primal[i * n + j]);
  best.scenario.cost = inst.cost_lo();
  induced_rhs(inst, best.plan, &best.scenario.supply, &best.scenario.demand);
  return best;
}

double worst_optimal_value(const Instance& inst, lp::Arithmetic arithmetic) {
  if (!strong_feasible_problem(inst)) return kInfinity;
  // In supply-equality mode strong feasibility pins every supply and demand,
  // and the balanced totals make the <= rows below behave as equalities.
  TransportLp t;
  t.mode = Mode::kSupplyLeq;
  t.cost = inst.cost_hi();
  t.supply = inst.supply_lo();
  t.demand = inst.demand_hi();
  const ScenarioSolution sol = solve_transport(t, arithmetic);
  if (!sol.optimal()) {
    throw Error(Errc::kNumericalFailure, "worst-value LP did not reach optimality");
  }
  return sol.value;
}

double worst_finite_fixed_rhs(const Instance& inst, lp::Arithmetic arithmetic) {
  if (!inst.supply_fixed() || !inst.demand_fixed()) {
    throw Error(Errc::kRhsNotFixed, "supplies and demands must be point intervals");
  }
  const Scenario sc = corner_scenario(inst, true, true, true);
  if (!scenario_feasibility_condition(inst, sc)) {
    throw Error(Errc::kInfeasibleScenario,
                "the fixed supply cannot serve the fixed demand");
  }
  const int m = inst.m();
  const int n = inst.n();
  const bool leq = inst.mode() == Mode::kSupplyLeq;
  lp::LpProblem p(lp::Sense::kMaximize);
  for (int i = 0; i < m; ++i)
    p.add_variable(-lp::kInf, leq ? 0.0 : lp::kInf, sc.supply[i]);
  for (int j = 0; j < n; ++j) p.add_variable(-lp::kInf, lp::kInf, sc.demand[j]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      p.add_row({{i, 1.0}, {m + j, 1.0}}, lp::Relation::kLessEqual,
                inst.cost(i, j).hi);
  const lp::LpOutcome out = lp::solve_lp(p, arithmetic);
  if (out.status != lp::Status::kOptimal) {
    throw Error(Errc::kNumericalFailure, "fixed-RHS dual LP did not reach optimality");
  }
  return out.value;
}

void initial_rhs(const Instance& inst, std::vector<double>* supply,
                 std::vector<double>* demand, double* g) {
  const int m = inst.m();
  const int n = inst.n();
  *g = std::min(inst.supply_hi_sum(), inst.demand_hi_sum());
  demand->assign(n, 0.0);
  supply->assign(m, 0.0);

  // Each entry takes as much as it can while leaving room for the lower
  // bounds of the entries after it.
  double lower_rest = inst.demand_lo_sum();
  double placed = 0.0;
  for (int j = 0; j < n; ++j) {
    lower_rest -= inst.demand(j).lo;
    const double want = *g - placed - lower_rest;
    (*demand)[j] = inst.demand(j).clamp(std::min(inst.demand(j).hi, want));
    placed += (*demand)[j];
  }
  lower_rest = inst.supply_lo_sum();
  placed = 0.0;
  for (int i = 0; i < m; ++i) {
    lower_rest -= inst.supply(i).lo;
    const double want = *g - placed - lower_rest;
    (*supply)[i] = std::max(inst.supply(i).lo, std::min(inst.supply(i).hi, want));
    placed += (*supply)[i];
  }
}

InitialScenario initial_scenario(const Instance& inst) {
  require_weakly_feasible(inst);
  InitialScenario init;
  initial_rhs(inst, &init.scenario.supply, &init.scenario.demand, &init.g);
  init.scenario.cost = inst.cost_hi();
  TransportLp t;
  t.mode = inst.mode();
  t.cost = init.scenario.cost;
  t.supply = init.scenario.supply;
  t.demand = init.scenario.demand;
  if (inst.mode() == Mode::kSupplyEq) {
    // Absorb rounding in the running sums so the equality rows stay consistent.
    t.mode = Mode::kSupplyLeq;
  }
  init.solution = solve_transport(t);
  if (!init.solution.optimal()) {
    throw Error(Errc::kNumericalFailure, "initial scenario is not solvable");
  }
  return init;
}

ValueRangeReport compute_value_range(const Instance& inst,
                                     WorstFiniteMethod method,
                                     const BnbConfig& bnb,
                                     const EnumerateOptions& enumerate) {
  ValueRangeReport r;
  r.best = best_optimal_value(inst);
  r.worst = worst_optimal_value(inst);
  if (r.worst < kInfinity) {
    r.worst_finite_value = r.worst;
  } else {
    r.worst_finite = solve_worst_finite(inst, method, bnb, enumerate);
    r.worst_finite_value = r.worst_finite->value;
  }
  return r;
}

}  // namespace itp
