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

// Decision procedures for weak and strong feasibility/optimality, both of a
// given transport plan and of the interval problem itself.
//
// "Weak" means for at least one scenario, "strong" means for every scenario.
// Supply-equality instances use the analogous conditions: supply rows become
// two-sided and the dual variables u lose their sign restriction.

#ifndef ITP_PROPERTIES_HPP_
#define ITP_PROPERTIES_HPP_

#include <optional>

#include "itp/core.hpp"

namespace itp {

// Tolerance used to build the active sets of the strong-optimality test.
inline constexpr double kActiveSetTol = 1e-7;
// Relative tolerance for optimality claims.
inline constexpr double kOptTol = 1e-6;

bool weak_feasible_solution(const Instance& inst, const TransportPlan& x);
bool strong_feasible_solution(const Instance& inst, const TransportPlan& x);

bool weak_feasible_problem(const Instance& inst);
bool strong_feasible_problem(const Instance& inst);

// Witness that x is optimal for a concrete scenario: the supply and demand
// are derived from x, the costs and duals come out of one LP.
struct WeakOptCertificate {
  Scenario scenario;
  DualPair duals;
  double gap = 0.0;  // primal minus dual objective at the witness
};

std::optional<WeakOptCertificate> weak_optimal_solution(const Instance& inst,
                                                        const TransportPlan& x);

// Requires point costs; throws Error{kCostsNotFixed} otherwise.
bool strong_optimal_solution_fixed_cost(const Instance& inst,
                                        const TransportPlan& x);

struct StrongOptOptions {
  int max_free_vars = 20;
  int threads = 0;  // 1 runs the serial reference loop
};

// Exponential sign-orthant test; throws Error{kTooManyFreeVariables} when the
// number of sign-split variables exceeds options.max_free_vars.
bool strong_optimal_solution_general(const Instance& inst,
                                     const TransportPlan& x,
                                     const StrongOptOptions& options = {});

bool weak_optimal_problem(const Instance& inst);
bool strong_optimal_problem(const Instance& inst);

// The supply/demand pair the weak-optimality test attaches to x, clamped into
// the instance boxes. Shared with the worst-value search.
void induced_rhs(const Instance& inst, const TransportPlan& x,
                 std::vector<double>* supply, std::vector<double>* demand);

}  // namespace itp

#endif  // ITP_PROPERTIES_HPP_
