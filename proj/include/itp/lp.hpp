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

// Generic LP container and the bounded-variable revised simplex engine.
//
// Problems are stated as
//
//   min/max  c'x   s.t.  row_lo <= A x <= row_hi,  lo <= x <= hi
//
// where row bounds come from the relation of each row (<=, =, >=, or a
// two-sided range). Solving in Float mode runs the simplex on doubles; Rational
// mode runs the same code on GMP rationals and returns exact results.

#ifndef ITP_LP_HPP_
#define ITP_LP_HPP_

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace itp::lp {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { kMinimize, kMaximize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual, kRange };
enum class Arithmetic { kFloat, kRational };
enum class Status { kOptimal, kInfeasible, kUnbounded };

std::string_view status_name(Status s);

struct Entry {
  int col;
  double value;
};

struct Row {
  std::vector<Entry> entries;
  double lo = -kInf;
  double hi = kInf;
  std::string name;

  Relation relation() const;
};

struct Variable {
  double lo = 0.0;
  double hi = kInf;
  double cost = 0.0;
  std::string name;
};

class LpProblem {
 public:
  explicit LpProblem(Sense sense = Sense::kMinimize) : sense_(sense) {}

  int add_variable(double lo = 0.0, double hi = kInf, double cost = 0.0,
                   std::string name = {});
  int add_row(std::vector<Entry> entries, Relation rel, double rhs,
              std::string name = {});
  int add_range_row(std::vector<Entry> entries, double lo, double hi,
                    std::string name = {});

  void set_sense(Sense s) { sense_ = s; }
  void set_cost(int var, double c) { vars_.at(var).cost = c; }
  void set_bounds(int var, double lo, double hi);

  Sense sense() const { return sense_; }
  int num_vars() const { return static_cast<int>(vars_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const Variable& var(int j) const { return vars_[j]; }
  const Row& row(int i) const { return rows_[i]; }
  std::span<const Variable> vars() const { return vars_; }
  std::span<const Row> rows() const { return rows_; }

  // Throws Error{kInvalidProblem} on crossed bounds, bad indices or
  // non-finite coefficients.
  void validate() const;

 private:
  Sense sense_;
  std::vector<Variable> vars_;
  std::vector<Row> rows_;
};

template <typename T>
struct BasicOutcome {
  Status status = Status::kInfeasible;
  std::vector<T> primal;  // one per variable (meaningful when Optimal)
  std::vector<T> duals;   // one per row, sign convention: reduced cost
                          // c - A'y; y <= 0 on binding <= rows of a min
  T value{};
  // Unbounded: improving direction over the variables.
  std::vector<T> ray;
  // Infeasible: row multipliers of the phase-one optimum; y'A x is bounded
  // away from the achievable row activity range.
  std::vector<T> farkas;
  std::int64_t iterations = 0;
};

using LpOutcome = BasicOutcome<double>;
using ExactOutcome = BasicOutcome<Rational>;

// Throws Error{kNumericalFailure} in Float mode when the simplex stalls or
// the final basis fails re-verification; Rational mode never does.
LpOutcome solve_lp(const LpProblem& p,
                   Arithmetic arithmetic = Arithmetic::kFloat);
ExactOutcome solve_lp_exact(const LpProblem& p);

// Residual checks used by tests and by the solver's own post-verification.
struct Residuals {
  double primal = 0.0;   // max bound / row violation
  double dual = 0.0;     // max reduced-cost sign violation
  double gap = 0.0;      // |primal objective - dual objective|
};
Residuals residuals(const LpProblem& p, const LpOutcome& out);

// CPLEX LP text format. Integer variables listed in `binaries` are written
// to a Binaries section.
void write_lp_format(std::ostream& os, const LpProblem& p,
                     std::span<const int> binaries = {});

}  // namespace itp::lp

#endif  // ITP_LP_HPP_
