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

// Domain types for interval transportation problems: closed intervals, the
// interval instance itself, scenarios drawn from it, transport plans and
// dual pairs.

#ifndef ITP_CORE_HPP_
#define ITP_CORE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "itp/error.hpp"

namespace itp {

// Absolute tolerance applied to sums and equality tests on instance data.
inline constexpr double kFeasTol = 1e-9;

inline bool approx_le(double a, double b, double tol = kFeasTol) {
  return a <= b + tol * std::max({1.0, std::abs(a), std::abs(b)});
}
inline bool approx_eq(double a, double b, double tol = kFeasTol) {
  return approx_le(a, b, tol) && approx_le(b, a, tol);
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
  // Closed membership with exact bound comparison.
  bool contains(double x) const { return lo <= x && x <= hi; }
  double clamp(double x) const { return std::clamp(x, lo, hi); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Row-major dense matrix.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[index(i, j)]; }
  const T& operator()(int i, int j) const { return data_[index(i, j)]; }

  std::span<T> row(int i) { return {data_.data() + index(i, 0), cols_}; }
  std::span<const T> row(int i) const {
    return {data_.data() + index(i, 0), static_cast<std::size_t>(cols_)};
  }
  std::span<const T> flat() const { return data_; }
  std::span<T> flat() { return data_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using Matrix = Grid<double>;

// x(i, j) is the amount shipped from source i to destination j.
using TransportPlan = Matrix;

double row_sum(const Matrix& x, int i);
double col_sum(const Matrix& x, int j);
// Sum over all entries of a(i,j) * b(i,j).
double dot(const Matrix& a, const Matrix& b);

enum class Mode {
  kSupplyLeq,  // sum_j x_ij <= s_i
  kSupplyEq,   // sum_j x_ij  = s_i
};

// Unchecked instance data as read from a file or assembled in code.
struct RawInstance {
  int m = 0;
  int n = 0;
  std::vector<std::vector<Interval>> cost;
  std::vector<Interval> supply;
  std::vector<Interval> demand;
  Mode mode = Mode::kSupplyLeq;
  std::string name;
};

// A validated interval transportation problem. Immutable once built, so it
// can be shared freely between threads.
class Instance {
 public:
  int m() const { return m_; }
  int n() const { return n_; }
  Mode mode() const { return mode_; }
  const std::string& name() const { return name_; }

  const Interval& cost(int i, int j) const { return cost_(i, j); }
  const Interval& supply(int i) const { return supply_[i]; }
  const Interval& demand(int j) const { return demand_[j]; }
  const Grid<Interval>& cost() const { return cost_; }
  std::span<const Interval> supply() const { return supply_; }
  std::span<const Interval> demand() const { return demand_; }

  Matrix cost_lo() const;
  Matrix cost_hi() const;
  std::vector<double> supply_lo() const;
  std::vector<double> supply_hi() const;
  std::vector<double> demand_lo() const;
  std::vector<double> demand_hi() const;

  double supply_lo_sum() const;
  double supply_hi_sum() const;
  double demand_lo_sum() const;
  double demand_hi_sum() const;

  bool costs_fixed() const;
  bool supply_fixed() const;
  bool demand_fixed() const;

  RawInstance raw() const;

 private:
  friend Instance validate_instance(RawInstance raw);
  Instance() = default;

  int m_ = 0;
  int n_ = 0;
  Grid<Interval> cost_;
  std::vector<Interval> supply_;
  std::vector<Interval> demand_;
  Mode mode_ = Mode::kSupplyLeq;
  std::string name_;
};

// Throws Error{kDimensionMismatch | kInvalidInterval | kNegativeBound}.
Instance validate_instance(RawInstance raw);

// One realization (c, s, d) of the interval data.
struct Scenario {
  Matrix cost;
  std::vector<double> supply;
  std::vector<double> demand;
};

struct DualPair {
  std::vector<double> u;  // supply rows
  std::vector<double> v;  // demand rows
};

bool contains_scenario(const Instance& inst, const Scenario& sc);

// Nonemptiness of the feasible set for the scenario's (s, d).
bool scenario_feasibility_condition(const Instance& inst, const Scenario& sc);

// Throws kDimensionMismatch when the plan does not have the shape m x n.
void check_plan_shape(const Instance& inst, const TransportPlan& x);

}  // namespace itp

#endif  // ITP_CORE_HPP_
