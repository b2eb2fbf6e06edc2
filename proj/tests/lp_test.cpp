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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "itp/error.hpp"
#include "itp/lp.hpp"

namespace itp::lp {
namespace {

TEST(SolveLp, SingleEquality) {
  LpProblem p;
  p.add_variable(0.0, kInf, 3.0);
  p.add_row({{0, 1.0}}, Relation::kEqual, 2.0);
  for (Arithmetic a : {Arithmetic::kFloat, Arithmetic::kRational}) {
    const LpOutcome out = solve_lp(p, a);
    ASSERT_EQ(out.status, Status::kOptimal);
    EXPECT_DOUBLE_EQ(out.primal[0], 2.0);
    EXPECT_DOUBLE_EQ(out.value, 6.0);
    EXPECT_DOUBLE_EQ(out.duals[0], 3.0);
  }
}

TEST(SolveLp, EmptyBoxIsInfeasible) {
  LpProblem p;
  p.add_variable(0.0, kInf, 1.0);
  p.add_row({{0, 1.0}}, Relation::kLessEqual, -1.0);
  for (Arithmetic a : {Arithmetic::kFloat, Arithmetic::kRational}) {
    const LpOutcome out = solve_lp(p, a);
    EXPECT_EQ(out.status, Status::kInfeasible);
    ASSERT_EQ(out.farkas.size(), 1u);
    EXPECT_NE(out.farkas[0], 0.0);
  }
}

TEST(SolveLp, FreeRayIsUnbounded) {
  LpProblem p(Sense::kMaximize);
  p.add_variable(0.0, kInf, 1.0);
  for (Arithmetic a : {Arithmetic::kFloat, Arithmetic::kRational}) {
    const LpOutcome out = solve_lp(p, a);
    EXPECT_EQ(out.status, Status::kUnbounded);
    ASSERT_EQ(out.ray.size(), 1u);
    EXPECT_GT(out.ray[0], 0.0);
  }
}

TEST(SolveLp, RangeRowsAndBoundedVariables) {
  // max x + 2y  s.t. 1 <= x + y <= 3, x in [0, 2], y in [0, 1.5]
  LpProblem p(Sense::kMaximize);
  p.add_variable(0.0, 2.0, 1.0);
  p.add_variable(0.0, 1.5, 2.0);
  p.add_range_row({{0, 1.0}, {1, 1.0}}, 1.0, 3.0);
  const LpOutcome out = solve_lp(p);
  ASSERT_EQ(out.status, Status::kOptimal);
  EXPECT_NEAR(out.value, 4.5, 1e-12);
  EXPECT_NEAR(out.primal[0], 1.5, 1e-12);
  EXPECT_NEAR(out.primal[1], 1.5, 1e-12);
}

TEST(SolveLp, FreeVariablesAndGreaterRows) {
  // min x - y  s.t. x - y >= -2, x >= 0 free y, y <= 4
  LpProblem p;
  p.add_variable(0.0, kInf, 1.0);
  p.add_variable(-kInf, 4.0, -1.0);
  p.add_row({{0, 1.0}, {1, -1.0}}, Relation::kGreaterEqual, -2.0);
  const LpOutcome out = solve_lp(p, Arithmetic::kRational);
  ASSERT_EQ(out.status, Status::kOptimal);
  EXPECT_DOUBLE_EQ(out.value, -2.0);
}

TEST(LpProblem, ValidationErrors) {
  LpProblem p;
  p.add_variable(1.0, 0.0);
  EXPECT_THROW(p.validate(), Error);
  LpProblem q;
  q.add_variable();
  EXPECT_THROW(q.add_row({{0, 1.0}}, Relation::kRange, 1.0), Error);
  q.add_row({{3, 1.0}}, Relation::kLessEqual, 1.0);
  EXPECT_THROW(q.validate(), Error);
}

TEST(SolveLp, ExactOutcomeIsExact) {
  // min x + y  s.t. 3x + y >= 1, x + 3y >= 1  -> x = y = 1/4
  LpProblem p;
  p.add_variable(0.0, kInf, 1.0);
  p.add_variable(0.0, kInf, 1.0);
  p.add_row({{0, 3.0}, {1, 1.0}}, Relation::kGreaterEqual, 1.0);
  p.add_row({{0, 1.0}, {1, 3.0}}, Relation::kGreaterEqual, 1.0);
  const ExactOutcome out = solve_lp_exact(p);
  ASSERT_EQ(out.status, Status::kOptimal);
  EXPECT_EQ(out.value, Rational(1, 2));
  EXPECT_EQ(out.primal[0], Rational(1, 4));
}

LpProblem random_lp(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> kind(0, 5);
  const int n = dim(rng);
  const int rows = dim(rng);
  LpProblem p(kind(rng) % 2 ? Sense::kMaximize : Sense::kMinimize);
  for (int j = 0; j < n; ++j) {
    const int k = kind(rng);
    const double lo = k == 0 ? -kInf : coef(rng) - 5.0;
    const double hi = k == 1 ? kInf : (std::isinf(lo) ? coef(rng) + 5.0 : lo + 1 + std::abs(coef(rng)));
    p.add_variable(lo, hi, coef(rng));
  }
  for (int i = 0; i < rows; ++i) {
    std::vector<Entry> e;
    for (int j = 0; j < n; ++j) {
      const int c = coef(rng);
      if (c != 0) e.push_back({j, double(c)});
    }
    const int k = kind(rng);
    const double rhs = coef(rng) * 2.0;
    if (k < 2) p.add_row(std::move(e), Relation::kLessEqual, rhs);
    else if (k < 4) p.add_row(std::move(e), Relation::kGreaterEqual, rhs);
    else if (k == 4) p.add_row(std::move(e), Relation::kEqual, rhs);
    else p.add_range_row(std::move(e), rhs - 3.0, rhs + 3.0);
  }
  return p;
}

double row_activity(const LpProblem& p, int i, const std::vector<double>& x) {
  double a = 0.0;
  for (const Entry& e : p.row(i).entries) a += e.value * x[e.col];
  return a;
}

TEST(SolveLp, FloatMatchesRationalOnRandomProblems) {
  std::mt19937_64 rng(2024);
  int optimal = 0, infeasible = 0, unbounded = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const LpProblem p = random_lp(rng);
    const LpOutcome f = solve_lp(p);
    const LpOutcome r = solve_lp(p, Arithmetic::kRational);
    ASSERT_EQ(f.status, r.status) << "trial " << trial;
    if (f.status == Status::kOptimal) {
      ++optimal;
      EXPECT_NEAR(f.value, r.value, 1e-6 * (1 + std::abs(r.value)));
      const Residuals res = residuals(p, f);
      EXPECT_LE(res.primal, 1e-7);
      EXPECT_LE(res.dual, 1e-7);
      EXPECT_LE(res.gap, 1e-6 * (1 + std::abs(f.value)));
      const Residuals exact = residuals(p, r);
      EXPECT_LE(exact.primal, 1e-12);
      EXPECT_LE(exact.gap, 1e-9 * (1 + std::abs(r.value)));
    } else if (f.status == Status::kUnbounded) {
      ++unbounded;
      const double sgn = p.sense() == Sense::kMaximize ? 1.0 : -1.0;
      double gain = 0.0;
      for (int j = 0; j < p.num_vars(); ++j) {
        gain += p.var(j).cost * r.ray[j];
        if (!std::isinf(p.var(j).hi)) {
          EXPECT_LE(r.ray[j], 1e-12);
        }
        if (!std::isinf(p.var(j).lo)) {
          EXPECT_GE(r.ray[j], -1e-12);
        }
      }
      EXPECT_GT(sgn * gain, 0.0);
      for (int i = 0; i < p.num_rows(); ++i) {
        const double a = row_activity(p, i, r.ray);
        if (!std::isinf(p.row(i).hi)) {
          EXPECT_LE(a, 1e-12);
        }
        if (!std::isinf(p.row(i).lo)) {
          EXPECT_GE(a, -1e-12);
        }
      }
    } else {
      ++infeasible;
      EXPECT_EQ(r.farkas.size(), static_cast<std::size_t>(p.num_rows()));
    }
  }
  EXPECT_GT(optimal, 50);
  EXPECT_GT(infeasible, 20);
  EXPECT_GT(unbounded, 5);
}

TEST(SolveLp, HighlyDegenerateProblemTerminates) {
  // Assignment-style LP with all-equal costs: every basis is degenerate.
  const int k = 7;
  LpProblem p;
  for (int i = 0; i < k * k; ++i) p.add_variable(0.0, kInf, 1.0);
  for (int i = 0; i < k; ++i) {
    std::vector<Entry> row, col;
    for (int j = 0; j < k; ++j) {
      row.push_back({i * k + j, 1.0});
      col.push_back({j * k + i, 1.0});
    }
    p.add_row(std::move(row), Relation::kEqual, 1.0);
    p.add_row(std::move(col), Relation::kEqual, 1.0);
  }
  for (Arithmetic a : {Arithmetic::kFloat, Arithmetic::kRational}) {
    const LpOutcome out = solve_lp(p, a);
    ASSERT_EQ(out.status, Status::kOptimal);
    EXPECT_NEAR(out.value, k, 1e-9);
  }
}

TEST(WriteLpFormat, SectionsPresent) {
  LpProblem p(Sense::kMaximize);
  p.add_variable(0.0, kInf, 2.0, "x");
  p.add_variable(0.0, 1.0, -1.0, "z");
  p.add_range_row({{0, 1.0}, {1, 3.0}}, 1.0, 4.0, "r");
  p.add_row({{0, 1.0}}, Relation::kEqual, 2.0, "e");
  std::ostringstream os;
  const int binaries[] = {1};
  write_lp_format(os, p, binaries);
  const std::string text = os.str();
  EXPECT_NE(text.find("Maximize"), std::string::npos);
  EXPECT_NE(text.find("Subject To"), std::string::npos);
  EXPECT_NE(text.find("r_lo"), std::string::npos);
  EXPECT_NE(text.find("r_hi"), std::string::npos);
  EXPECT_NE(text.find("Binaries"), std::string::npos);
  EXPECT_NE(text.find("End"), std::string::npos);
}

}  // namespace
}  // namespace itp::lp
