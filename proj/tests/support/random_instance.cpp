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

#include "random_instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>

namespace itp::testing {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

namespace {

Interval draw(std::mt19937_64& rng, int lo_max, int width_max, bool point,
              double point_prob, int lo_min = 0) {
  const int lo = uniform_int(rng, lo_min, lo_max);
  const bool degenerate =
      point || std::uniform_real_distribution<double>(0.0, 1.0)(rng) < point_prob;
  const int width = degenerate ? 0 : uniform_int(rng, 1, width_max);
  return {static_cast<double>(lo), static_cast<double>(lo + width)};
}

double lo_sum(const std::vector<Interval>& v) {
  double s = 0.0;
  for (const Interval& iv : v) s += iv.lo;
  return s;
}
double hi_sum(const std::vector<Interval>& v) {
  double s = 0.0;
  for (const Interval& iv : v) s += iv.hi;
  return s;
}

}  // namespace

Instance random_instance(std::mt19937_64& rng, const RandomSpec& spec,
                         bool allow_infeasible) {
  for (;;) {
    RawInstance raw;
    raw.m = spec.m;
    raw.n = spec.n;
    raw.mode = spec.mode;
    raw.cost.assign(spec.m, std::vector<Interval>(spec.n));
    for (auto& row : raw.cost)
      for (Interval& c : row)
        c = draw(rng, spec.cost_max, spec.cost_max / 2 + 1, spec.point_costs,
                 spec.point_prob);
    for (int i = 0; i < spec.m; ++i)
      raw.supply.push_back(draw(rng, spec.rhs_max, spec.rhs_max, spec.point_supply,
                                spec.point_prob, 1));
    for (int j = 0; j < spec.n; ++j)
      raw.demand.push_back(draw(rng, spec.rhs_max, spec.rhs_max, spec.point_demand,
                                spec.point_prob, 0));
    bool ok = hi_sum(raw.supply) >= lo_sum(raw.demand);
    if (spec.mode == Mode::kSupplyEq) ok = ok && lo_sum(raw.supply) <= hi_sum(raw.demand);
    if (ok || allow_infeasible) return validate_instance(std::move(raw));
  }
}

Instance random_strongly_feasible(std::mt19937_64& rng, int m, int n, Mode mode) {
  RawInstance raw;
  raw.m = m;
  raw.n = n;
  raw.mode = mode;
  raw.cost.assign(m, std::vector<Interval>(n));
  for (auto& row : raw.cost)
    for (Interval& c : row) c = draw(rng, 20, 10, false, 0.2);
  std::vector<int> d(n);
  for (int& v : d) v = uniform_int(rng, 0, 10);
  const int total = std::accumulate(d.begin(), d.end(), 0);
  for (int v : d) raw.demand.push_back({double(v), double(v)});
  if (mode == Mode::kSupplyEq) {
    // Every supply pinned, totals balanced.
    std::vector<int> s(m, 0);
    for (int k = 0; k < total; ++k) ++s[uniform_int(rng, 0, m - 1)];
    for (int v : s) raw.supply.push_back({double(v), double(v)});
  } else {
    std::vector<int> s(m, 0);
    const int lower_total = total + uniform_int(rng, 0, 5);
    for (int k = 0; k < lower_total; ++k) ++s[uniform_int(rng, 0, m - 1)];
    for (int v : s) raw.supply.push_back({double(v), double(v + uniform_int(rng, 0, 8))});
  }
  return validate_instance(std::move(raw));
}

Instance random_fixed_rhs(std::mt19937_64& rng, int m, int n, Mode mode) {
  RawInstance raw;
  raw.m = m;
  raw.n = n;
  raw.mode = mode;
  raw.cost.assign(m, std::vector<Interval>(n));
  for (auto& row : raw.cost)
    for (Interval& c : row) c = draw(rng, 20, 10, false, 0.2);
  std::vector<int> d(n);
  for (int& v : d) v = uniform_int(rng, 0, 10);
  const int total = std::accumulate(d.begin(), d.end(), 0);
  const int supply_total =
      mode == Mode::kSupplyEq ? total : total + uniform_int(rng, 0, 6);
  std::vector<int> s(m, 0);
  for (int k = 0; k < supply_total; ++k) ++s[uniform_int(rng, 0, m - 1)];
  for (int v : d) raw.demand.push_back({double(v), double(v)});
  for (int v : s) raw.supply.push_back({double(v), double(v)});
  return validate_instance(std::move(raw));
}

Scenario random_feasible_scenario(std::mt19937_64& rng, const Instance& inst) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Scenario sc;
  sc.cost = Matrix(inst.m(), inst.n());
  for (int i = 0; i < inst.m(); ++i)
    for (int j = 0; j < inst.n(); ++j) {
      const Interval& c = inst.cost(i, j);
      sc.cost(i, j) = std::round(c.lo + unit(rng) * c.width());
    }
  auto pick = [&](const Interval& iv) {
    return static_cast<double>(uniform_int(rng, int(iv.lo), int(iv.hi)));
  };
  // Lower bounds plus `total - lower sum` unit increments at random entries
  // with room left.
  auto spread = [&](std::span<const Interval> box, int total) {
    std::vector<double> v;
    int placed = 0;
    for (const Interval& iv : box) {
      v.push_back(iv.lo);
      placed += int(iv.lo);
    }
    while (placed < total) {
      const int k = uniform_int(rng, 0, int(box.size()) - 1);
      if (v[k] < box[k].hi) {
        v[k] += 1.0;
        ++placed;
      }
    }
    return v;
  };
  if (inst.mode() == Mode::kSupplyEq) {
    const int lo = int(std::max(inst.supply_lo_sum(), inst.demand_lo_sum()));
    const int hi = int(std::min(inst.supply_hi_sum(), inst.demand_hi_sum()));
    const int total = uniform_int(rng, lo, hi);
    sc.supply = spread(inst.supply(), total);
    sc.demand = spread(inst.demand(), total);
    return sc;
  }
  for (const Interval& iv : inst.demand()) sc.demand.push_back(pick(iv));
  const int need = int(std::accumulate(sc.demand.begin(), sc.demand.end(), 0.0));
  if (need > inst.supply_hi_sum()) {
    sc.demand = spread(inst.demand(), int(std::max(inst.demand_lo_sum(),
                                                   std::min(double(need), inst.supply_hi_sum()))));
  }
  const int have = int(std::accumulate(sc.demand.begin(), sc.demand.end(), 0.0));
  const int total = uniform_int(rng, std::max(have, int(inst.supply_lo_sum())),
                                int(inst.supply_hi_sum()));
  sc.supply = spread(inst.supply(), total);
  return sc;
}

Instance point_instance(const Scenario& sc, Mode mode) {
  RawInstance raw;
  raw.m = sc.cost.rows();
  raw.n = sc.cost.cols();
  raw.mode = mode;
  raw.cost.assign(raw.m, std::vector<Interval>(raw.n));
  for (int i = 0; i < raw.m; ++i)
    for (int j = 0; j < raw.n; ++j) raw.cost[i][j] = {sc.cost(i, j), sc.cost(i, j)};
  for (double s : sc.supply) raw.supply.push_back({s, s});
  for (double d : sc.demand) raw.demand.push_back({d, d});
  return validate_instance(std::move(raw));
}

Instance make_instance(std::vector<std::vector<Interval>> cost,
                       std::vector<Interval> supply, std::vector<Interval> demand,
                       Mode mode) {
  RawInstance raw;
  raw.m = static_cast<int>(supply.size());
  raw.n = static_cast<int>(demand.size());
  raw.mode = mode;
  raw.cost = std::move(cost);
  raw.supply = std::move(supply);
  raw.demand = std::move(demand);
  return validate_instance(std::move(raw));
}

Matrix matrix_of(std::initializer_list<std::initializer_list<double>> rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m ? static_cast<int>(rows.begin()->size()) : 0;
  Matrix x(m, n);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (double v : r) x(i, j++) = v;
    ++i;
  }
  return x;
}

}  // namespace itp::testing
