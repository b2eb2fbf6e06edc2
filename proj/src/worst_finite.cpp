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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <ostream>

#include "itp/lp.hpp"
#include "itp/parallel.hpp"
#include "itp/properties.hpp"
#include "worst_finite_internal.hpp"

namespace itp {

namespace detail {

void require_weakly_feasible(const Instance& inst) {
  if (!weak_feasible_problem(inst)) {
    throw Error(Errc::kNotWeaklyFeasible,
                "no scenario of the instance has a feasible plan");
  }
}

void finalize_result(const Instance& inst, WorstFiniteResult* r) {
  r->demand_upper = inst.demand_hi_sum();
  if (!r->has_incumbent) return;
  r->scenario = extract_worst_scenario(inst, *r);
  r->shipped = 0.0;
  for (double d : r->scenario.demand) r->shipped += d;
  r->paradox = !approx_le(r->demand_upper, r->shipped, 1e-9);
}

}  // namespace detail

namespace {

using lp::Rational;

struct PatternBest {
  bool found = false;
  std::int64_t index = -1;
  Rational value;
  std::vector<Rational> x;
  std::vector<Rational> uv;
  std::int64_t lp_solves = 0;

  // Larger value wins, ties go to the lower pattern index.
  bool beats(const Rational& v, std::int64_t idx) const {
    return !found || v > value || (v == value && idx < index);
  }
  void merge(PatternBest&& other) {
    lp_solves += other.lp_solves;
    if (other.found && beats(other.value, other.index)) {
      found = true;
      index = other.index;
      value = std::move(other.value);
      x = std::move(other.x);
      uv = std::move(other.uv);
    }
  }
};

class PatternSolver {
 public:
  explicit PatternSolver(const Instance& inst)
      : inst_(inst), m_(inst.m()), n_(inst.n()),
        leq_(inst.mode() == Mode::kSupplyLeq) {}

  int bits() const { return m_ * n_ + (leq_ ? m_ : 0); }

  bool in_k(std::int64_t p, int k) const { return (p >> k) & 1; }
  bool in_l(std::int64_t p, int i) const {
    return leq_ && ((p >> (m_ * n_ + i)) & 1);
  }

  void visit(std::int64_t p, PatternBest* best) const {
    // x-part: maximize upper costs over the primal rows of the pattern.
    lp::LpProblem xp(lp::Sense::kMaximize);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j)
        xp.add_variable(0.0, in_k(p, i * n_ + j) ? 0.0 : lp::kInf,
                        inst_.cost(i, j).hi);
    for (int i = 0; i < m_; ++i) {
      std::vector<lp::Entry> row;
      for (int j = 0; j < n_; ++j) row.push_back({i * n_ + j, 1.0});
      const bool lower = !leq_ || in_l(p, i);
      xp.add_range_row(std::move(row), lower ? inst_.supply(i).lo : -lp::kInf,
                       inst_.supply(i).hi);
    }
    for (int j = 0; j < n_; ++j) {
      std::vector<lp::Entry> col;
      for (int i = 0; i < m_; ++i) col.push_back({i * n_ + j, 1.0});
      xp.add_range_row(std::move(col), inst_.demand(j).lo, inst_.demand(j).hi);
    }
    ++best->lp_solves;
    lp::ExactOutcome xo = lp::solve_lp_exact(xp);
    if (xo.status != lp::Status::kOptimal) return;
    if (!best->beats(xo.value, p)) return;

    // Dual part: (u, v) feasible with the pattern's tight rows and signs.
    lp::LpProblem dp(lp::Sense::kMinimize);
    for (int i = 0; i < m_; ++i) {
      if (!leq_) {
        dp.add_variable(-lp::kInf, lp::kInf);
      } else if (in_l(p, i)) {
        dp.add_variable(-lp::kInf, 0.0);
      } else {
        dp.add_variable(0.0, 0.0);
      }
    }
    for (int j = 0; j < n_; ++j) dp.add_variable(-lp::kInf, lp::kInf);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) {
        dp.add_row({{i, 1.0}, {m_ + j, 1.0}},
                   in_k(p, i * n_ + j) ? lp::Relation::kLessEqual
                                       : lp::Relation::kEqual,
                   inst_.cost(i, j).hi);
      }
    }
    ++best->lp_solves;
    lp::ExactOutcome dout = lp::solve_lp_exact(dp);
    if (dout.status != lp::Status::kOptimal) return;
    best->found = true;
    best->index = p;
    best->value = std::move(xo.value);
    best->x = std::move(xo.primal);
    best->uv = std::move(dout.primal);
  }

  WorstFiniteResult result(const PatternBest& best) const {
    WorstFiniteResult r;
    if (!best.found) return r;
    r.has_incumbent = true;
    r.proven_optimal = true;
    r.value = best.value.convert_to<double>();
    r.upper_bound = r.value;
    r.plan = TransportPlan(m_, n_);
    for (int k = 0; k < m_ * n_; ++k) r.plan(k / n_, k % n_) = best.x[k].convert_to<double>();
    r.duals.u.resize(m_);
    r.duals.v.resize(n_);
    for (int i = 0; i < m_; ++i) r.duals.u[i] = best.uv[i].convert_to<double>();
    for (int j = 0; j < n_; ++j) r.duals.v[j] = best.uv[m_ + j].convert_to<double>();
    ComplementarityPattern pat;
    pat.zero_pairs.resize(m_ * n_);
    pat.slack_sources.resize(m_);
    for (int k = 0; k < m_ * n_; ++k) pat.zero_pairs[k] = in_k(best.index, k);
    for (int i = 0; i < m_; ++i) pat.slack_sources[i] = in_l(best.index, i);
    r.pattern = std::move(pat);
    return r;
  }

 private:
  const Instance& inst_;
  int m_;
  int n_;
  bool leq_;
};

}  // namespace

WorstFiniteResult worst_finite_enumerate(const Instance& inst,
                                         const EnumerateOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  PatternSolver solver(inst);
  if (solver.bits() > options.max_bits || solver.bits() > 62) {
    throw Error(Errc::kInstanceTooLarge,
                std::to_string(solver.bits()) + " pattern bits exceed the cap of " +
                    std::to_string(options.max_bits));
  }
  detail::require_weakly_feasible(inst);

  const std::int64_t patterns = std::int64_t{1} << solver.bits();
  const int threads = resolve_threads(options.threads);
  PatternBest best;
  if (threads == 1) {
    for (std::int64_t p = 0; p < patterns; ++p) solver.visit(p, &best);
  } else {
    std::exception_ptr failure;
#pragma omp parallel num_threads(threads)
    {
      PatternBest local;
#pragma omp for schedule(dynamic, 32) nowait
      for (std::int64_t p = 0; p < patterns; ++p) {
        try {
          solver.visit(p, &local);
        } catch (...) {
#pragma omp critical(itp_enum_error)
          if (!failure) failure = std::current_exception();
        }
      }
#pragma omp critical(itp_enum_merge)
      best.merge(std::move(local));
    }
    if (failure) std::rethrow_exception(failure);
  }

  WorstFiniteResult r = solver.result(best);
  if (!r.has_incumbent) {
    throw Error(Errc::kNumericalFailure, "no complementarity pattern is feasible");
  }
  r.stats.nodes = patterns;
  r.stats.lp_solves = best.lp_solves;
  r.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.stats.best_found_seconds = r.stats.wall_seconds;
  r.log.push_back({r.stats.wall_seconds, r.value, r.upper_bound, patterns});
  detail::finalize_result(inst, &r);
  return r;
}

int pattern_bits(const Instance& inst) {
  return inst.m() * inst.n() + (inst.mode() == Mode::kSupplyLeq ? inst.m() : 0);
}

WorstFiniteResult solve_worst_finite(const Instance& inst, WorstFiniteMethod method,
                                     const BnbConfig& bnb,
                                     const EnumerateOptions& enumerate) {
  if (method == WorstFiniteMethod::kAuto) {
    method = pattern_bits(inst) <= enumerate.max_bits ? WorstFiniteMethod::kEnumerate
                                                      : WorstFiniteMethod::kBnb;
  }
  return method == WorstFiniteMethod::kEnumerate ? worst_finite_enumerate(inst, enumerate)
                                                 : worst_finite_bnb(inst, bnb);
}

Scenario extract_worst_scenario(const Instance& inst,
                                const WorstFiniteResult& result) {
  if (!result.has_incumbent) {
    throw Error(Errc::kNoIncumbent, "the search produced no incumbent plan");
  }
  check_plan_shape(inst, result.plan);
  Scenario sc;
  sc.cost = inst.cost_hi();
  induced_rhs(inst, result.plan, &sc.supply, &sc.demand);
  return sc;
}

void write_convergence_csv(std::ostream& os,
                           const std::vector<ConvergencePoint>& log) {
  os << "elapsed_seconds,incumbent_value,upper_bound,nodes_explored\n";
  const auto old = os.precision(17);
  for (const ConvergencePoint& p : log) {
    os << p.elapsed_seconds << ',' << p.incumbent << ',' << p.upper_bound << ','
       << p.nodes << '\n';
  }
  os.precision(old);
}

double certificate_violation(const Instance& inst, const WorstFiniteResult& r) {
  if (!r.has_incumbent) {
    throw Error(Errc::kNoIncumbent, "the search produced no incumbent plan");
  }
  const int m = inst.m();
  const int n = inst.n();
  const TransportPlan& x = r.plan;
  const bool leq = inst.mode() == Mode::kSupplyLeq;
  double worst = 0.0;
  auto note = [&worst](double v) { worst = std::max(worst, v); };
  for (int i = 0; i < m; ++i) {
    const double rs = row_sum(x, i);
    note(rs - inst.supply(i).hi);
    if (!leq) note(inst.supply(i).lo - rs);
    if (leq) note(r.duals.u[i]);
    // Sources shipping below their lower supply must have u_i = 0.
    note(std::max(0.0, inst.supply(i).lo - rs) * std::abs(r.duals.u[i]));
    for (int j = 0; j < n; ++j) {
      const double slack = inst.cost(i, j).hi - r.duals.u[i] - r.duals.v[j];
      note(-x(i, j));
      note(-slack);
      note(std::max(0.0, x(i, j)) * std::abs(slack));
    }
  }
  for (int j = 0; j < n; ++j) {
    const double cs = col_sum(x, j);
    note(inst.demand(j).lo - cs);
    note(cs - inst.demand(j).hi);
  }
  return worst;
}

}  // namespace itp
