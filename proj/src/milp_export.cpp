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

#include "itp/milp_export.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace itp {

BigMModel build_big_m_model(const Instance& inst, double big_m) {
  const int m = inst.m();
  const int n = inst.n();
  const bool leq = inst.mode() == Mode::kSupplyLeq;
  if (big_m <= 0.0) {
    double cmax = 0.0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) cmax = std::max(cmax, inst.cost(i, j).hi);
    big_m = std::max({1.0, inst.supply_hi_sum(), inst.demand_hi_sum(),
                      2.0 * (m + n) * cmax});
  }
  BigMModel model;
  model.big_m = big_m;
  lp::LpProblem& p = model.problem;
  auto idx = [n](int i, int j) { return i * n + j; };
  auto tag = [](const char* base, int i, int j = -1) {
    std::string s = std::string(base) + "_" + std::to_string(i + 1);
    if (j >= 0) s += "_" + std::to_string(j + 1);
    return s;
  };

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) p.add_variable(0.0, lp::kInf, inst.cost(i, j).hi, tag("x", i, j));
  const int u0 = p.num_vars();
  for (int i = 0; i < m; ++i) p.add_variable(-lp::kInf, leq ? 0.0 : lp::kInf, 0.0, tag("u", i));
  const int v0 = p.num_vars();
  for (int j = 0; j < n; ++j) p.add_variable(-lp::kInf, lp::kInf, 0.0, tag("v", j));
  const int z0 = p.num_vars();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      model.binaries.push_back(p.add_variable(0.0, 1.0, 0.0, tag("z", i, j)));
    }
  const int w0 = p.num_vars();
  if (leq) {
    for (int i = 0; i < m; ++i) model.binaries.push_back(p.add_variable(0.0, 1.0, 0.0, tag("w", i)));
  }

  for (int i = 0; i < m; ++i) {
    std::vector<lp::Entry> row;
    for (int j = 0; j < n; ++j) row.push_back({idx(i, j), 1.0});
    if (leq) {
      p.add_row(row, lp::Relation::kLessEqual, inst.supply(i).hi, tag("supply_hi", i));
      // w_i = 1: ships at least the lower supply; w_i = 0: u_i = 0.
      row.push_back({w0 + i, -inst.supply(i).lo});
      p.add_row(std::move(row), lp::Relation::kGreaterEqual, 0.0, tag("supply_lo", i));
      p.add_row({{u0 + i, 1.0}, {w0 + i, big_m}}, lp::Relation::kGreaterEqual, 0.0,
                tag("u_zero", i));
    } else {
      p.add_range_row(std::move(row), inst.supply(i).lo, inst.supply(i).hi, tag("supply", i));
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<lp::Entry> col;
    for (int i = 0; i < m; ++i) col.push_back({idx(i, j), 1.0});
    p.add_range_row(std::move(col), inst.demand(j).lo, inst.demand(j).hi, tag("demand", j));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const double c = inst.cost(i, j).hi;
      p.add_row({{u0 + i, 1.0}, {v0 + j, 1.0}}, lp::Relation::kLessEqual, c,
                tag("dual", i, j));
      // z_ij = 1: tight dual row; z_ij = 0: x_ij = 0.
      p.add_row({{u0 + i, 1.0}, {v0 + j, 1.0}, {z0 + idx(i, j), -big_m}},
                lp::Relation::kGreaterEqual, c - big_m, tag("tight", i, j));
      p.add_row({{idx(i, j), 1.0}, {z0 + idx(i, j), -big_m}}, lp::Relation::kLessEqual,
                0.0, tag("ship", i, j));
    }
  }
  return model;
}

void write_big_m_model(std::ostream& os, const Instance& inst, double big_m) {
  const BigMModel model = build_big_m_model(inst, big_m);
  lp::write_lp_format(os, model.problem, model.binaries);
}

}  // namespace itp
