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

// Revised primal simplex over bounded variables, templated on the scalar.
//
// Each row i becomes  sum_j a_ij x_j - r_i = 0  with an activity variable r_i
// bounded by the row bounds, so the constraint right-hand side is always zero
// and the slack basis (all r_i basic) is the natural starting point. Rows whose
// starting activity violates its bounds receive an artificial column and the
// first phase minimizes the sum of artificials.
//
// The basis inverse is kept dense and updated with a rank-one pivot; in double
// precision it is rebuilt from scratch every kRefactorEvery pivots and before
// optimality is declared.

#ifndef ITP_SRC_SIMPLEX_HPP_
#define ITP_SRC_SIMPLEX_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "itp/error.hpp"
#include "itp/lp.hpp"

namespace itp::lp::detail {

template <typename T>
struct Tolerances;

template <>
struct Tolerances<double> {
  static constexpr bool kExact = false;
  static double feas() { return 1e-9; }
  static double opt() { return 1e-9; }
  static double pivot() { return 1e-9; }
};

template <>
struct Tolerances<Rational> {
  static constexpr bool kExact = true;
  static Rational feas() { return Rational(0); }
  static Rational opt() { return Rational(0); }
  static Rational pivot() { return Rational(0); }
};

inline double abs_of(double x) { return std::abs(x); }
inline Rational abs_of(const Rational& x) { return x < 0 ? Rational(-x) : x; }

template <typename T>
class Simplex {
 public:
  explicit Simplex(const LpProblem& p);

  BasicOutcome<T> solve();

 private:
  using Tol = Tolerances<T>;

  enum class State : std::uint8_t { kBasic, kAtLower, kAtUpper, kFreeZero };

  struct ColEntry {
    int row;
    T value;
  };

  enum class PhaseResult { kOptimal, kUnbounded };

  void build_columns(const LpProblem& p);
  void initial_basis();
  PhaseResult run_phase();
  bool choose_entering(const std::vector<T>& y, int* entering, int* dir);
  void compute_duals(std::vector<T>* y) const;
  T reduced_cost(int j, const std::vector<T>& y) const;
  void column_ftran(int j, std::vector<T>* alpha) const;
  void pivot(int leave_pos, const std::vector<T>& alpha);
  void refactor();
  void recompute_basic_values();
  bool basic_values_feasible() const;
  T phase_objective() const;

  bool fixed(int j) const {
    return !lo_inf_[j] && !hi_inf_[j] && lo_[j] == hi_[j];
  }

  static constexpr int kRefactorEvery = 64;

  int rows_ = 0;
  int structurals_ = 0;
  int cols_ = 0;  // structurals + activities + artificials
  bool maximize_ = false;

  std::vector<std::vector<ColEntry>> col_;
  std::vector<T> lo_, hi_;
  std::vector<char> lo_inf_, hi_inf_;
  std::vector<T> cost_;        // current phase costs
  std::vector<T> true_cost_;   // phase-two costs (sense adjusted)
  std::vector<T> x_;
  std::vector<State> state_;
  std::vector<int> basis_;     // position -> column
  std::vector<int> position_;  // column -> position, -1 when nonbasic
  std::vector<T> binv_;        // rows_ x rows_, row-major
  std::vector<int> artificial_;

  std::int64_t iterations_ = 0;
  std::int64_t since_refactor_ = 0;
  std::int64_t degenerate_run_ = 0;
  std::int64_t iteration_limit_ = 0;
  bool bland_ = false;
  std::vector<T> ray_;
};

template <typename T>
Simplex<T>::Simplex(const LpProblem& p) {
  rows_ = p.num_rows();
  structurals_ = p.num_vars();
  maximize_ = p.sense() == Sense::kMaximize;
  build_columns(p);
  iteration_limit_ = 20000 + 100LL * (rows_ + cols_);
}

template <typename T>
void Simplex<T>::build_columns(const LpProblem& p) {
  col_.assign(structurals_ + rows_, {});
  for (int i = 0; i < rows_; ++i) {
    for (const Entry& e : p.row(i).entries) {
      if (e.value != 0.0) col_[e.col].push_back({i, T(e.value)});
    }
  }
  const int total = structurals_ + rows_;
  lo_.assign(total, T(0));
  hi_.assign(total, T(0));
  lo_inf_.assign(total, 0);
  hi_inf_.assign(total, 0);
  true_cost_.assign(total, T(0));
  for (int j = 0; j < structurals_; ++j) {
    const Variable& v = p.var(j);
    lo_inf_[j] = std::isinf(v.lo);
    hi_inf_[j] = std::isinf(v.hi);
    if (!lo_inf_[j]) lo_[j] = T(v.lo);
    if (!hi_inf_[j]) hi_[j] = T(v.hi);
    true_cost_[j] = maximize_ ? T(-v.cost) : T(v.cost);
  }
  for (int i = 0; i < rows_; ++i) {
    const int j = structurals_ + i;
    const Row& r = p.row(i);
    col_[j].push_back({i, T(-1)});
    lo_inf_[j] = std::isinf(r.lo);
    hi_inf_[j] = std::isinf(r.hi);
    if (!lo_inf_[j]) lo_[j] = T(r.lo);
    if (!hi_inf_[j]) hi_[j] = T(r.hi);
  }
  cols_ = total;
}

template <typename T>
void Simplex<T>::initial_basis() {
  x_.assign(cols_, T(0));
  state_.assign(cols_, State::kAtLower);
  for (int j = 0; j < structurals_; ++j) {
    if (!lo_inf_[j]) {
      x_[j] = lo_[j];
      state_[j] = State::kAtLower;
    } else if (!hi_inf_[j]) {
      x_[j] = hi_[j];
      state_[j] = State::kAtUpper;
    } else {
      state_[j] = State::kFreeZero;
    }
  }
  std::vector<T> activity(rows_, T(0));
  for (int j = 0; j < structurals_; ++j) {
    if (x_[j] == 0) continue;
    for (const auto& e : col_[j]) activity[e.row] += e.value * x_[j];
  }

  basis_.assign(rows_, -1);
  binv_.assign(static_cast<std::size_t>(rows_) * rows_, T(0));
  for (int i = 0; i < rows_; ++i) {
    const int r = structurals_ + i;
    const bool below = !lo_inf_[r] && activity[i] < lo_[r];
    const bool above = !hi_inf_[r] && activity[i] > hi_[r];
    if (!below && !above) {
      basis_[i] = r;
      state_[r] = State::kBasic;
      x_[r] = activity[i];
      binv_[static_cast<std::size_t>(i) * rows_ + i] = T(-1);
      continue;
    }
    // Activity variable sits at the violated bound; the artificial absorbs
    // the difference: a x - r + sigma * art = 0 with art >= 0.
    x_[r] = below ? lo_[r] : hi_[r];
    state_[r] = below ? State::kAtLower : State::kAtUpper;
    const int sigma = below ? 1 : -1;
    const int art = cols_++;
    col_.push_back({{i, T(sigma)}});
    lo_.push_back(T(0));
    hi_.push_back(T(0));
    lo_inf_.push_back(0);
    hi_inf_.push_back(1);
    true_cost_.push_back(T(0));
    x_.push_back(T(sigma) * (x_[r] - activity[i]));
    state_.push_back(State::kBasic);
    basis_[i] = art;
    binv_[static_cast<std::size_t>(i) * rows_ + i] = T(sigma);
    artificial_.push_back(art);
  }
  position_.assign(cols_, -1);
  for (int p = 0; p < rows_; ++p) position_[basis_[p]] = p;
}

template <typename T>
void Simplex<T>::compute_duals(std::vector<T>* y) const {
  y->assign(rows_, T(0));
  for (int p = 0; p < rows_; ++p) {
    const T& cb = cost_[basis_[p]];
    if (cb == 0) continue;
    const T* row = &binv_[static_cast<std::size_t>(p) * rows_];
    for (int k = 0; k < rows_; ++k) {
      if (row[k] != 0) (*y)[k] += cb * row[k];
    }
  }
}

template <typename T>
T Simplex<T>::reduced_cost(int j, const std::vector<T>& y) const {
  T d = cost_[j];
  for (const auto& e : col_[j]) d -= y[e.row] * e.value;
  return d;
}

template <typename T>
void Simplex<T>::column_ftran(int j, std::vector<T>* alpha) const {
  alpha->assign(rows_, T(0));
  for (const auto& e : col_[j]) {
    for (int p = 0; p < rows_; ++p) {
      const T& b = binv_[static_cast<std::size_t>(p) * rows_ + e.row];
      if (b != 0) (*alpha)[p] += b * e.value;
    }
  }
}

template <typename T>
bool Simplex<T>::choose_entering(const std::vector<T>& y, int* entering,
                                 int* dir) {
  const T tol = Tol::opt();
  int best = -1;
  int best_dir = 0;
  T best_score(0);
  for (int j = 0; j < cols_; ++j) {
    if (state_[j] == State::kBasic || fixed(j)) continue;
    const T d = reduced_cost(j, y);
    int dj = 0;
    switch (state_[j]) {
      case State::kAtLower:
        if (d < -tol) dj = +1;
        break;
      case State::kAtUpper:
        if (d > tol) dj = -1;
        break;
      case State::kFreeZero:
        if (d < -tol) dj = +1;
        else if (d > tol) dj = -1;
        break;
      case State::kBasic:
        break;
    }
    if (dj == 0) continue;
    if (bland_) {
      *entering = j;
      *dir = dj;
      return true;
    }
    const T score = abs_of(d);
    if (best < 0 || score > best_score) {
      best = j;
      best_dir = dj;
      best_score = score;
    }
  }
  if (best < 0) return false;
  *entering = best;
  *dir = best_dir;
  return true;
}

template <typename T>
void Simplex<T>::pivot(int leave_pos, const std::vector<T>& alpha) {
  const std::size_t r0 = static_cast<std::size_t>(leave_pos) * rows_;
  const T inv = T(1) / alpha[leave_pos];
  for (int k = 0; k < rows_; ++k) binv_[r0 + k] *= inv;
  for (int p = 0; p < rows_; ++p) {
    if (p == leave_pos || alpha[p] == 0) continue;
    const T f = alpha[p];
    const std::size_t rp = static_cast<std::size_t>(p) * rows_;
    for (int k = 0; k < rows_; ++k) {
      if (binv_[r0 + k] != 0) binv_[rp + k] -= f * binv_[r0 + k];
    }
  }
}

template <typename T>
void Simplex<T>::refactor() {
  if constexpr (Tol::kExact) {
    return;
  } else {
    // Gauss-Jordan on [B | I] with partial pivoting.
    const int m = rows_;
    std::vector<double> b(static_cast<std::size_t>(m) * m, 0.0);
    for (int p = 0; p < m; ++p) {
      for (const auto& e : col_[basis_[p]]) {
        b[static_cast<std::size_t>(e.row) * m + p] = e.value;
      }
    }
    std::vector<double> inv(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) inv[static_cast<std::size_t>(i) * m + i] = 1;
    for (int c = 0; c < m; ++c) {
      int piv = c;
      for (int r = c + 1; r < m; ++r) {
        if (std::abs(b[static_cast<std::size_t>(r) * m + c]) >
            std::abs(b[static_cast<std::size_t>(piv) * m + c])) {
          piv = r;
        }
      }
      const double pv = b[static_cast<std::size_t>(piv) * m + c];
      if (std::abs(pv) < 1e-12) {
        throw Error(Errc::kNumericalFailure, "singular basis on refactor");
      }
      if (piv != c) {
        for (int k = 0; k < m; ++k) {
          std::swap(b[static_cast<std::size_t>(piv) * m + k],
                    b[static_cast<std::size_t>(c) * m + k]);
          std::swap(inv[static_cast<std::size_t>(piv) * m + k],
                    inv[static_cast<std::size_t>(c) * m + k]);
        }
      }
      const double ip = 1.0 / pv;
      for (int k = 0; k < m; ++k) {
        b[static_cast<std::size_t>(c) * m + k] *= ip;
        inv[static_cast<std::size_t>(c) * m + k] *= ip;
      }
      for (int r = 0; r < m; ++r) {
        if (r == c) continue;
        const double f = b[static_cast<std::size_t>(r) * m + c];
        if (f == 0.0) continue;
        for (int k = 0; k < m; ++k) {
          b[static_cast<std::size_t>(r) * m + k] -=
              f * b[static_cast<std::size_t>(c) * m + k];
          inv[static_cast<std::size_t>(r) * m + k] -=
              f * inv[static_cast<std::size_t>(c) * m + k];
        }
      }
    }
    // inv = B^{-1} with rows indexed by basis position.
    binv_ = std::move(inv);
    since_refactor_ = 0;
    recompute_basic_values();
  }
}

template <typename T>
void Simplex<T>::recompute_basic_values() {
  std::vector<T> rhs(rows_, T(0));
  for (int j = 0; j < cols_; ++j) {
    if (state_[j] == State::kBasic || x_[j] == 0) continue;
    for (const auto& e : col_[j]) rhs[e.row] -= e.value * x_[j];
  }
  for (int p = 0; p < rows_; ++p) {
    T v(0);
    const std::size_t rp = static_cast<std::size_t>(p) * rows_;
    for (int k = 0; k < rows_; ++k) {
      if (rhs[k] != 0) v += binv_[rp + k] * rhs[k];
    }
    x_[basis_[p]] = v;
  }
}

template <typename T>
bool Simplex<T>::basic_values_feasible() const {
  for (int p = 0; p < rows_; ++p) {
    const int j = basis_[p];
    if constexpr (Tol::kExact) {
      if (!lo_inf_[j] && x_[j] < lo_[j]) return false;
      if (!hi_inf_[j] && x_[j] > hi_[j]) return false;
    } else {
      const double t = 1e-7;
      if (!lo_inf_[j] && x_[j] < lo_[j] - t * (1 + std::abs(lo_[j])))
        return false;
      if (!hi_inf_[j] && x_[j] > hi_[j] + t * (1 + std::abs(hi_[j])))
        return false;
    }
  }
  return true;
}

template <typename T>
T Simplex<T>::phase_objective() const {
  T v(0);
  for (int j = 0; j < cols_; ++j) {
    if (cost_[j] != 0) v += cost_[j] * x_[j];
  }
  return v;
}

template <typename T>
typename Simplex<T>::PhaseResult Simplex<T>::run_phase() {
  std::vector<T> y;
  std::vector<T> alpha;
  const std::int64_t bland_after = 3LL * (rows_ + structurals_);
  int verify_rounds = 0;
  for (;;) {
    if (iterations_ > iteration_limit_) {
      if constexpr (!Tol::kExact) {
        throw Error(Errc::kNumericalFailure, "simplex iteration limit");
      }
    }
    compute_duals(&y);
    int q = -1;
    int dir = 0;
    if (!choose_entering(y, &q, &dir)) {
      if constexpr (!Tol::kExact) {
        // Re-verify on a fresh factorization before declaring optimality.
        if (since_refactor_ > 0 && verify_rounds < 3) {
          ++verify_rounds;
          refactor();
          if (!basic_values_feasible()) {
            throw Error(Errc::kNumericalFailure,
                        "basis lost primal feasibility on refactor");
          }
          continue;
        }
      }
      return PhaseResult::kOptimal;
    }
    column_ftran(q, &alpha);

    // Ratio test. Moving x_q by dir * theta changes basic p by
    // -dir * theta * alpha[p].
    const T ptol = Tol::pivot();
    bool bounded_step = false;
    T theta(0);
    int leave = -1;  // basis position, or -1 for a bound flip
    if (!lo_inf_[q] && !hi_inf_[q]) {
      theta = hi_[q] - lo_[q];
      bounded_step = true;
    }
    for (int p = 0; p < rows_; ++p) {
      const T a = dir > 0 ? alpha[p] : T(-alpha[p]);
      if (abs_of(a) <= ptol || a == 0) continue;
      const int j = basis_[p];
      T ratio;
      if (a > 0) {
        if (lo_inf_[j]) continue;
        ratio = (x_[j] - lo_[j]) / a;
      } else {
        if (hi_inf_[j]) continue;
        ratio = (hi_[j] - x_[j]) / (-a);
      }
      if (ratio < 0) ratio = T(0);
      bool take = false;
      if (!bounded_step) {
        take = true;
      } else if constexpr (Tol::kExact) {
        if (ratio < theta) {
          take = true;
        } else if (ratio == theta) {
          if (leave < 0) {
            take = !bland_;  // prefer a real pivot over a flip unless Bland
          } else if (bland_) {
            take = j < basis_[leave];
          } else {
            take = abs_of(alpha[p]) > abs_of(alpha[leave]);
          }
        }
      } else {
        const double slack = 1e-12 * (1.0 + std::abs(theta));
        if (ratio < theta - slack) {
          take = true;
        } else if (ratio <= theta + slack) {
          if (leave < 0) {
            take = !bland_;
          } else if (bland_) {
            take = j < basis_[leave];
          } else {
            take = std::abs(alpha[p]) > std::abs(alpha[leave]);
          }
        }
      }
      if (take) {
        theta = ratio;
        leave = p;
        bounded_step = true;
      }
    }
    if (!bounded_step) {
      ray_.assign(structurals_, T(0));
      if (q < structurals_) ray_[q] = T(dir);
      for (int p = 0; p < rows_; ++p) {
        if (basis_[p] < structurals_) ray_[basis_[p]] = T(-dir) * alpha[p];
      }
      return PhaseResult::kUnbounded;
    }

    ++iterations_;
    if (theta <= Tol::feas()) {
      if (++degenerate_run_ > bland_after) bland_ = true;
    } else {
      degenerate_run_ = 0;
      bland_ = false;
    }

    const T step = dir > 0 ? theta : T(-theta);
    if (theta != 0) {
      x_[q] += step;
      for (int p = 0; p < rows_; ++p) {
        if (alpha[p] != 0) x_[basis_[p]] -= step * alpha[p];
      }
    }
    if (leave < 0) {
      // Bound flip.
      if (dir > 0) {
        x_[q] = hi_[q];
        state_[q] = State::kAtUpper;
      } else {
        x_[q] = lo_[q];
        state_[q] = State::kAtLower;
      }
      continue;
    }
    const int out = basis_[leave];
    const T a_out = dir > 0 ? alpha[leave] : T(-alpha[leave]);
    if (a_out > 0) {
      x_[out] = lo_[out];
      state_[out] = State::kAtLower;
    } else {
      x_[out] = hi_[out];
      state_[out] = fixed(out) ? State::kAtLower : State::kAtUpper;
    }
    pivot(leave, alpha);
    basis_[leave] = q;
    position_[out] = -1;
    position_[q] = leave;
    state_[q] = State::kBasic;
    if constexpr (!Tol::kExact) {
      if (++since_refactor_ >= kRefactorEvery) refactor();
    }
  }
}

template <typename T>
BasicOutcome<T> Simplex<T>::solve() {
  BasicOutcome<T> out;
  initial_basis();

  if (!artificial_.empty()) {
    cost_.assign(cols_, T(0));
    for (int a : artificial_) cost_[a] = T(1);
    [[maybe_unused]] const T initial_infeasibility = phase_objective();
    run_phase();  // phase one is bounded below by zero
    const T infeas = phase_objective();
    bool infeasible;
    if constexpr (Tol::kExact) {
      infeasible = infeas > 0;
    } else {
      infeasible = infeas > 1e-9 * std::max(1.0, initial_infeasibility);
    }
    if (infeasible) {
      out.status = Status::kInfeasible;
      std::vector<T> y;
      compute_duals(&y);
      out.farkas = std::move(y);
      out.iterations = iterations_;
      return out;
    }
    for (int a : artificial_) {
      hi_inf_[a] = 0;
      hi_[a] = T(0);
      if (state_[a] != State::kBasic) {
        x_[a] = T(0);
        state_[a] = State::kAtLower;
      }
    }
  }

  cost_ = true_cost_;
  cost_.resize(cols_, T(0));
  degenerate_run_ = 0;
  bland_ = false;
  if (run_phase() == PhaseResult::kUnbounded) {
    out.status = Status::kUnbounded;
    out.ray = std::move(ray_);
    out.iterations = iterations_;
    return out;
  }

  out.status = Status::kOptimal;
  out.primal.assign(x_.begin(), x_.begin() + structurals_);
  std::vector<T> y;
  compute_duals(&y);
  T value(0);
  for (int j = 0; j < structurals_; ++j) value += true_cost_[j] * x_[j];
  if (maximize_) {
    for (auto& v : y) v = -v;
    value = -value;
  }
  out.duals = std::move(y);
  out.value = value;
  out.iterations = iterations_;
  return out;
}

}  // namespace itp::lp::detail

#endif  // ITP_SRC_SIMPLEX_HPP_
