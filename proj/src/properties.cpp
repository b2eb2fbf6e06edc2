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

#include "itp/properties.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <numeric>

#include "itp/lp.hpp"
#include "itp/parallel.hpp"
#include "itp/scenario.hpp"

namespace itp {

namespace {

bool nonnegative(const TransportPlan& x) {
  for (double v : x.flat())
    if (v < -kFeasTol) return false;
  return true;
}

}  // namespace

bool weak_feasible_solution(const Instance& inst, const TransportPlan& x) {
  check_plan_shape(inst, x);
  if (!nonnegative(x)) return false;
  for (int i = 0; i < inst.m(); ++i) {
    const double r = row_sum(x, i);
    if (!approx_le(r, inst.supply(i).hi)) return false;
    if (inst.mode() == Mode::kSupplyEq && !approx_le(inst.supply(i).lo, r))
      return false;
  }
  for (int j = 0; j < inst.n(); ++j) {
    const double c = col_sum(x, j);
    if (!approx_le(inst.demand(j).lo, c) || !approx_le(c, inst.demand(j).hi))
      return false;
  }
  return true;
}

bool strong_feasible_solution(const Instance& inst, const TransportPlan& x) {
  check_plan_shape(inst, x);
  if (!inst.demand_fixed()) return false;
  if (inst.mode() == Mode::kSupplyEq && !inst.supply_fixed()) return false;
  if (!nonnegative(x)) return false;
  for (int i = 0; i < inst.m(); ++i) {
    const double r = row_sum(x, i);
    if (inst.mode() == Mode::kSupplyLeq) {
      if (!approx_le(r, inst.supply(i).lo)) return false;
    } else if (!approx_eq(r, inst.supply(i).lo)) {
      return false;
    }
  }
  for (int j = 0; j < inst.n(); ++j) {
    if (!approx_eq(col_sum(x, j), inst.demand(j).hi)) return false;
  }
  return true;
}

bool weak_feasible_problem(const Instance& inst) {
  if (inst.mode() == Mode::kSupplyLeq) {
    return approx_le(inst.demand_lo_sum(), inst.supply_hi_sum());
  }
  return approx_le(inst.supply_lo_sum(), inst.demand_hi_sum()) &&
         approx_le(inst.demand_lo_sum(), inst.supply_hi_sum());
}

bool strong_feasible_problem(const Instance& inst) {
  if (inst.mode() == Mode::kSupplyLeq) {
    return approx_le(inst.demand_hi_sum(), inst.supply_lo_sum());
  }
  const double a = inst.supply_lo_sum();
  return approx_eq(a, inst.supply_hi_sum()) &&
         approx_eq(a, inst.demand_lo_sum()) &&
         approx_eq(a, inst.demand_hi_sum());
}

bool weak_optimal_problem(const Instance& inst) {
  return weak_feasible_problem(inst);
}

bool strong_optimal_problem(const Instance& inst) {
  return strong_feasible_problem(inst);
}

void induced_rhs(const Instance& inst, const TransportPlan& x,
                 std::vector<double>* supply, std::vector<double>* demand) {
  supply->resize(inst.m());
  demand->resize(inst.n());
  for (int i = 0; i < inst.m(); ++i) {
    const double r = std::max(0.0, row_sum(x, i));
    (*supply)[i] = inst.mode() == Mode::kSupplyLeq
                       ? inst.supply(i).clamp(std::max(inst.supply(i).lo, r))
                       : inst.supply(i).clamp(r);
  }
  for (int j = 0; j < inst.n(); ++j) {
    (*demand)[j] = inst.demand(j).clamp(col_sum(x, j));
  }
}

std::optional<WeakOptCertificate> weak_optimal_solution(const Instance& inst,
                                                        const TransportPlan& x) {
  if (!weak_feasible_solution(inst, x)) return std::nullopt;
  const int m = inst.m();
  const int n = inst.n();
  std::vector<double> s, d;
  induced_rhs(inst, x, &s, &d);

  // maximize  s'u + d'v - sum c_ij x_ij  over dual-feasible (u, v) and
  // c in the cost box. Weak duality caps the value at zero; reaching zero is
  // exactly feasibility of the strong-duality system.
  lp::LpProblem p(lp::Sense::kMaximize);
  const bool leq = inst.mode() == Mode::kSupplyLeq;
  for (int i = 0; i < m; ++i) p.add_variable(-lp::kInf, leq ? 0.0 : lp::kInf, s[i]);
  for (int j = 0; j < n; ++j) p.add_variable(-lp::kInf, lp::kInf, d[j]);
  const int c0 = m + n;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      p.add_variable(inst.cost(i, j).lo, inst.cost(i, j).hi, -x(i, j));
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      p.add_row({{i, 1.0}, {m + j, 1.0}, {c0 + i * n + j, -1.0}},
                lp::Relation::kLessEqual, 0.0);
    }
  }
  const lp::LpOutcome out = lp::solve_lp(p);
  if (out.status != lp::Status::kOptimal) return std::nullopt;

  WeakOptCertificate cert;
  cert.scenario.supply = s;
  cert.scenario.demand = d;
  cert.scenario.cost = Matrix(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      cert.scenario.cost(i, j) =
          inst.cost(i, j).clamp(out.primal[c0 + i * n + j]);
  cert.duals.u.assign(out.primal.begin(), out.primal.begin() + m);
  cert.duals.v.assign(out.primal.begin() + m, out.primal.begin() + m + n);
  const double primal = dot(cert.scenario.cost, x);
  cert.gap = -out.value;
  if (cert.gap > kOptTol * std::max(1.0, std::abs(primal))) return std::nullopt;
  return cert;
}

bool strong_optimal_solution_fixed_cost(const Instance& inst,
                                        const TransportPlan& x) {
  check_plan_shape(inst, x);
  if (!inst.costs_fixed()) {
    throw Error(Errc::kCostsNotFixed,
                "costs are intervals; use the general strong-optimality test");
  }
  if (!strong_feasible_solution(inst, x)) return false;
  TransportLp t;
  t.mode = inst.mode();
  t.cost = inst.cost_hi();
  t.supply = inst.supply_hi();
  t.demand = inst.demand_hi();
  const ScenarioSolution best = solve_transport(t);
  if (!best.optimal()) return false;
  return approx_le(dot(t.cost, x), best.value, kOptTol);
}

namespace {

// Data of the sign-orthant search: one LP per assignment of signs to the
// variables whose cost interval is nondegenerate and that are not already
// sign-restricted by the active set.
struct OrthantSystem {
  const Instance* inst = nullptr;
  std::vector<char> nonneg;      // (i,j) in K*: u_ij >= 0
  std::vector<char> tight_row;   // i in I*
  std::vector<int> split;        // sign-split pairs, widest interval first

  bool feasible(std::uint64_t orthant) const;
};

bool OrthantSystem::feasible(std::uint64_t orthant) const {
  const Instance& in = *inst;
  const int m = in.m();
  const int n = in.n();
  std::vector<int> sign(m * n, 0);  // +1: u >= 0, -1: u <= 0, 0: free
  for (int k = 0; k < m * n; ++k) {
    if (nonneg[k]) sign[k] = 1;
  }
  for (std::size_t b = 0; b < split.size(); ++b) {
    sign[split[b]] = (orthant >> b) & 1 ? -1 : 1;
  }
  lp::LpProblem p(lp::Sense::kMinimize);
  std::vector<lp::Entry> objective_row;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const int k = i * n + j;
      const Interval& c = in.cost(i, j);
      double lo = -lp::kInf, hi = lp::kInf, coef = c.lo;
      if (sign[k] > 0) {
        lo = 0.0;
      } else if (sign[k] < 0) {
        hi = 0.0;
        coef = c.hi;
      }
      // sign 0 only happens for point costs, where lo == hi.
      p.add_variable(lo, hi);
      objective_row.push_back({k, coef});
    }
  }
  p.add_row(std::move(objective_row), lp::Relation::kLessEqual, -1.0);
  for (int j = 0; j < n; ++j) {
    std::vector<lp::Entry> col;
    for (int i = 0; i < m; ++i) col.push_back({i * n + j, 1.0});
    p.add_row(std::move(col), lp::Relation::kEqual, 0.0);
  }
  for (int i = 0; i < m; ++i) {
    const bool eq = in.mode() == Mode::kSupplyEq;
    if (!eq && !tight_row[i]) continue;
    std::vector<lp::Entry> row;
    for (int j = 0; j < n; ++j) row.push_back({i * n + j, 1.0});
    p.add_row(std::move(row), eq ? lp::Relation::kEqual : lp::Relation::kLessEqual,
              0.0);
  }
  return lp::solve_lp(p).status == lp::Status::kOptimal;
}

}  // namespace

bool strong_optimal_solution_general(const Instance& inst,
                                     const TransportPlan& x,
                                     const StrongOptOptions& options) {
  check_plan_shape(inst, x);
  if (!strong_feasible_solution(inst, x)) return false;
  const int m = inst.m();
  const int n = inst.n();

  OrthantSystem sys;
  sys.inst = &inst;
  sys.nonneg.assign(m * n, 0);
  sys.tight_row.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    const double hi = inst.supply(i).hi;
    sys.tight_row[i] =
        std::abs(row_sum(x, i) - hi) <= kActiveSetTol * std::max(1.0, hi);
    for (int j = 0; j < n; ++j) {
      const int k = i * n + j;
      sys.nonneg[k] = std::abs(x(i, j)) <= kActiveSetTol;
      if (!sys.nonneg[k] && !inst.cost(i, j).is_point()) sys.split.push_back(k);
    }
  }
  if (static_cast<int>(sys.split.size()) > options.max_free_vars) {
    throw Error(Errc::kTooManyFreeVariables,
                std::to_string(sys.split.size()) +
                    " sign-free variables exceed the cap of " +
                    std::to_string(options.max_free_vars));
  }
  std::stable_sort(sys.split.begin(), sys.split.end(), [&](int a, int b) {
    return inst.cost(a / n, a % n).width() > inst.cost(b / n, b % n).width();
  });

  const std::int64_t orthants = std::int64_t{1} << sys.split.size();
  const int threads = resolve_threads(options.threads);
  bool weakly_feasible = false;
  if (threads == 1 || orthants == 1) {
    for (std::int64_t k = 0; k < orthants && !weakly_feasible; ++k) {
      weakly_feasible = sys.feasible(static_cast<std::uint64_t>(k));
    }
  } else {
    std::atomic<bool> found{false};
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t k = 0; k < orthants; ++k) {
      if (found.load(std::memory_order_relaxed)) continue;
      try {
        if (sys.feasible(static_cast<std::uint64_t>(k))) found = true;
      } catch (...) {
#pragma omp critical(itp_orthant_error)
        if (!failure) failure = std::current_exception();
        found = true;
      }
    }
    if (failure) std::rethrow_exception(failure);
    weakly_feasible = found.load();
  }
  return !weakly_feasible;
}

}  // namespace itp
