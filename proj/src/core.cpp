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

#include "itp/core.hpp"

#include <numeric>
#include <sstream>

namespace itp {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kInvalidInterval: return "InvalidInterval";
    case Errc::kNegativeBound: return "NegativeBound";
    case Errc::kInvalidProblem: return "InvalidProblem";
    case Errc::kNumericalFailure: return "NumericalFailure";
    case Errc::kNotWeaklyFeasible: return "NotWeaklyFeasible";
    case Errc::kCostsNotFixed: return "CostsNotFixed";
    case Errc::kTooManyFreeVariables: return "TooManyFreeVariables";
    case Errc::kRhsNotFixed: return "RhsNotFixed";
    case Errc::kInfeasibleScenario: return "InfeasibleScenario";
    case Errc::kInstanceTooLarge: return "InstanceTooLarge";
    case Errc::kNoIncumbent: return "NoIncumbent";
    case Errc::kParseError: return "ParseError";
    case Errc::kMissingField: return "MissingField";
    case Errc::kIoError: return "IoError";
    case Errc::kInvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

double row_sum(const Matrix& x, int i) {
  double s = 0.0;
  for (double v : x.row(i)) s += v;
  return s;
}

double col_sum(const Matrix& x, int j) {
  double s = 0.0;
  for (int i = 0; i < x.rows(); ++i) s += x(i, j);
  return s;
}

double dot(const Matrix& a, const Matrix& b) {
  auto fa = a.flat();
  auto fb = b.flat();
  return std::inner_product(fa.begin(), fa.end(), fb.begin(), 0.0);
}

namespace {

void check_interval(const Interval& iv, const std::string& where) {
  if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
    throw Error(Errc::kInvalidInterval, where + " has a non-finite bound");
  }
  if (iv.lo > iv.hi) {
    std::ostringstream os;
    os << where << " = [" << iv.lo << ", " << iv.hi << "] has lo > hi";
    throw Error(Errc::kInvalidInterval, os.str());
  }
  if (iv.lo < 0.0) {
    throw Error(Errc::kNegativeBound, where + " has a negative lower bound");
  }
}

std::vector<double> los(std::span<const Interval> v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& iv : v) out.push_back(iv.lo);
  return out;
}

std::vector<double> his(std::span<const Interval> v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& iv : v) out.push_back(iv.hi);
  return out;
}

double sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

}  // namespace

Instance validate_instance(RawInstance raw) {
  if (raw.m < 1 || raw.n < 1) {
    throw Error(Errc::kDimensionMismatch, "m and n must be at least 1");
  }
  if (static_cast<int>(raw.cost.size()) != raw.m) {
    throw Error(Errc::kDimensionMismatch, "cost has " +
                                              std::to_string(raw.cost.size()) +
                                              " rows, expected m = " +
                                              std::to_string(raw.m));
  }
  for (int i = 0; i < raw.m; ++i) {
    if (static_cast<int>(raw.cost[i].size()) != raw.n) {
      throw Error(Errc::kDimensionMismatch,
                  "cost row " + std::to_string(i) + " has " +
                      std::to_string(raw.cost[i].size()) +
                      " entries, expected n = " + std::to_string(raw.n));
    }
  }
  if (static_cast<int>(raw.supply.size()) != raw.m) {
    throw Error(Errc::kDimensionMismatch, "supply length differs from m");
  }
  if (static_cast<int>(raw.demand.size()) != raw.n) {
    throw Error(Errc::kDimensionMismatch, "demand length differs from n");
  }

  Instance inst;
  inst.m_ = raw.m;
  inst.n_ = raw.n;
  inst.mode_ = raw.mode;
  inst.name_ = std::move(raw.name);
  inst.cost_ = Grid<Interval>(raw.m, raw.n);
  for (int i = 0; i < raw.m; ++i) {
    for (int j = 0; j < raw.n; ++j) {
      check_interval(raw.cost[i][j], "cost[" + std::to_string(i) + "][" +
                                         std::to_string(j) + "]");
      inst.cost_(i, j) = raw.cost[i][j];
    }
  }
  for (int i = 0; i < raw.m; ++i) {
    check_interval(raw.supply[i], "supply[" + std::to_string(i) + "]");
  }
  for (int j = 0; j < raw.n; ++j) {
    check_interval(raw.demand[j], "demand[" + std::to_string(j) + "]");
  }
  inst.supply_ = std::move(raw.supply);
  inst.demand_ = std::move(raw.demand);
  return inst;
}

Matrix Instance::cost_lo() const {
  Matrix c(m_, n_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) c(i, j) = cost_(i, j).lo;
  return c;
}

Matrix Instance::cost_hi() const {
  Matrix c(m_, n_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) c(i, j) = cost_(i, j).hi;
  return c;
}

std::vector<double> Instance::supply_lo() const { return los(supply_); }
std::vector<double> Instance::supply_hi() const { return his(supply_); }
std::vector<double> Instance::demand_lo() const { return los(demand_); }
std::vector<double> Instance::demand_hi() const { return his(demand_); }

double Instance::supply_lo_sum() const { return sum(supply_lo()); }
double Instance::supply_hi_sum() const { return sum(supply_hi()); }
double Instance::demand_lo_sum() const { return sum(demand_lo()); }
double Instance::demand_hi_sum() const { return sum(demand_hi()); }

bool Instance::costs_fixed() const {
  for (const auto& c : cost_.flat())
    if (!c.is_point()) return false;
  return true;
}

bool Instance::supply_fixed() const {
  return std::all_of(supply_.begin(), supply_.end(),
                     [](const Interval& iv) { return iv.is_point(); });
}

bool Instance::demand_fixed() const {
  return std::all_of(demand_.begin(), demand_.end(),
                     [](const Interval& iv) { return iv.is_point(); });
}

RawInstance Instance::raw() const {
  RawInstance raw;
  raw.m = m_;
  raw.n = n_;
  raw.mode = mode_;
  raw.name = name_;
  raw.supply = supply_;
  raw.demand = demand_;
  raw.cost.assign(m_, std::vector<Interval>(n_));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) raw.cost[i][j] = cost_(i, j);
  return raw;
}

namespace {

void check_scenario_shape(const Instance& inst, const Scenario& sc) {
  if (sc.cost.rows() != inst.m() || sc.cost.cols() != inst.n() ||
      static_cast<int>(sc.supply.size()) != inst.m() ||
      static_cast<int>(sc.demand.size()) != inst.n()) {
    throw Error(Errc::kDimensionMismatch,
                "scenario shape does not match the instance");
  }
}

}  // namespace

bool contains_scenario(const Instance& inst, const Scenario& sc) {
  check_scenario_shape(inst, sc);
  for (int i = 0; i < inst.m(); ++i) {
    if (!inst.supply(i).contains(sc.supply[i])) return false;
    for (int j = 0; j < inst.n(); ++j) {
      if (!inst.cost(i, j).contains(sc.cost(i, j))) return false;
    }
  }
  for (int j = 0; j < inst.n(); ++j) {
    if (!inst.demand(j).contains(sc.demand[j])) return false;
  }
  return true;
}

bool scenario_feasibility_condition(const Instance& inst, const Scenario& sc) {
  check_scenario_shape(inst, sc);
  const double s = sum(sc.supply);
  const double d = sum(sc.demand);
  if (inst.mode() == Mode::kSupplyLeq) return approx_le(d, s);
  return approx_eq(s, d);
}

void check_plan_shape(const Instance& inst, const TransportPlan& x) {
  if (x.rows() != inst.m() || x.cols() != inst.n()) {
    throw Error(Errc::kDimensionMismatch,
                "plan is " + std::to_string(x.rows()) + "x" +
                    std::to_string(x.cols()) + ", instance is " +
                    std::to_string(inst.m()) + "x" + std::to_string(inst.n()));
  }
}

}  // namespace itp
