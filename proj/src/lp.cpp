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

#include "itp/lp.hpp"

#include <cmath>
#include <ostream>

#include "itp/error.hpp"
#include "simplex.hpp"

namespace itp::lp {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kOptimal: return "Optimal";
    case Status::kInfeasible: return "Infeasible";
    case Status::kUnbounded: return "Unbounded";
  }
  return "Unknown";
}

Relation Row::relation() const {
  if (lo == hi) return Relation::kEqual;
  if (std::isinf(lo)) return Relation::kLessEqual;
  if (std::isinf(hi)) return Relation::kGreaterEqual;
  return Relation::kRange;
}

int LpProblem::add_variable(double lo, double hi, double cost,
                            std::string name) {
  vars_.push_back({lo, hi, cost, std::move(name)});
  return num_vars() - 1;
}

int LpProblem::add_row(std::vector<Entry> entries, Relation rel, double rhs,
                       std::string name) {
  Row r;
  r.entries = std::move(entries);
  r.name = std::move(name);
  switch (rel) {
    case Relation::kLessEqual: r.hi = rhs; break;
    case Relation::kGreaterEqual: r.lo = rhs; break;
    case Relation::kEqual: r.lo = r.hi = rhs; break;
    case Relation::kRange:
      throw Error(Errc::kInvalidProblem, "use add_range_row for ranges");
  }
  rows_.push_back(std::move(r));
  return num_rows() - 1;
}

int LpProblem::add_range_row(std::vector<Entry> entries, double lo, double hi,
                             std::string name) {
  Row r;
  r.entries = std::move(entries);
  r.lo = lo;
  r.hi = hi;
  r.name = std::move(name);
  rows_.push_back(std::move(r));
  return num_rows() - 1;
}

void LpProblem::set_bounds(int var, double lo, double hi) {
  vars_.at(var).lo = lo;
  vars_.at(var).hi = hi;
}

void LpProblem::validate() const {
  for (int j = 0; j < num_vars(); ++j) {
    const Variable& v = vars_[j];
    if (std::isnan(v.lo) || std::isnan(v.hi) || v.lo > v.hi ||
        v.lo == kInf || v.hi == -kInf) {
      throw Error(Errc::kInvalidProblem,
                  "variable " + std::to_string(j) + " has crossed bounds");
    }
    if (!std::isfinite(v.cost)) {
      throw Error(Errc::kInvalidProblem,
                  "variable " + std::to_string(j) + " has non-finite cost");
    }
  }
  for (int i = 0; i < num_rows(); ++i) {
    const Row& r = rows_[i];
    if (std::isnan(r.lo) || std::isnan(r.hi) || r.lo > r.hi ||
        r.lo == kInf || r.hi == -kInf) {
      throw Error(Errc::kInvalidProblem,
                  "row " + std::to_string(i) + " has crossed bounds");
    }
    for (const Entry& e : r.entries) {
      if (e.col < 0 || e.col >= num_vars()) {
        throw Error(Errc::kInvalidProblem,
                    "row " + std::to_string(i) + " references column " +
                        std::to_string(e.col));
      }
      if (!std::isfinite(e.value)) {
        throw Error(Errc::kInvalidProblem,
                    "row " + std::to_string(i) + " has a non-finite entry");
      }
    }
  }
}

namespace {

LpOutcome to_double(const ExactOutcome& ex) {
  LpOutcome out;
  out.status = ex.status;
  out.iterations = ex.iterations;
  out.value = ex.value.convert_to<double>();
  auto conv = [](const std::vector<Rational>& v) {
    std::vector<double> r;
    r.reserve(v.size());
    for (const auto& q : v) r.push_back(q.convert_to<double>());
    return r;
  };
  out.primal = conv(ex.primal);
  out.duals = conv(ex.duals);
  out.ray = conv(ex.ray);
  out.farkas = conv(ex.farkas);
  return out;
}

}  // namespace

LpOutcome solve_lp(const LpProblem& p, Arithmetic arithmetic) {
  p.validate();
  if (arithmetic == Arithmetic::kRational) {
    return to_double(detail::Simplex<Rational>(p).solve());
  }
  return detail::Simplex<double>(p).solve();
}

ExactOutcome solve_lp_exact(const LpProblem& p) {
  p.validate();
  return detail::Simplex<Rational>(p).solve();
}

Residuals residuals(const LpProblem& p, const LpOutcome& out) {
  Residuals res;
  if (out.status != Status::kOptimal) return res;
  const double sgn = p.sense() == Sense::kMaximize ? -1.0 : 1.0;
  std::vector<double> activity(p.num_rows(), 0.0);
  for (int i = 0; i < p.num_rows(); ++i) {
    for (const Entry& e : p.row(i).entries) {
      activity[i] += e.value * out.primal[e.col];
    }
    const Row& r = p.row(i);
    res.primal = std::max({res.primal, r.lo - activity[i], activity[i] - r.hi});
  }
  std::vector<double> reduced(p.num_vars(), 0.0);
  double primal_obj = 0.0;
  for (int j = 0; j < p.num_vars(); ++j) {
    const Variable& v = p.var(j);
    res.primal = std::max({res.primal, v.lo - out.primal[j],
                           out.primal[j] - v.hi});
    reduced[j] = sgn * v.cost;
    primal_obj += sgn * v.cost * out.primal[j];
  }
  // Work in minimization form: y' = sgn * y.
  double dual_obj = 0.0;
  for (int i = 0; i < p.num_rows(); ++i) {
    const double y = sgn * out.duals[i];
    for (const Entry& e : p.row(i).entries) reduced[e.col] -= y * e.value;
    if (y > 0) {
      if (std::isinf(p.row(i).lo)) res.dual = std::max(res.dual, y);
      else dual_obj += y * p.row(i).lo;
    } else if (y < 0) {
      if (std::isinf(p.row(i).hi)) res.dual = std::max(res.dual, -y);
      else dual_obj += y * p.row(i).hi;
    }
  }
  for (int j = 0; j < p.num_vars(); ++j) {
    const double d = reduced[j];
    const Variable& v = p.var(j);
    if (d > 0) {
      if (std::isinf(v.lo)) res.dual = std::max(res.dual, d);
      else dual_obj += d * v.lo;
    } else if (d < 0) {
      if (std::isinf(v.hi)) res.dual = std::max(res.dual, -d);
      else dual_obj += d * v.hi;
    }
  }
  res.gap = std::abs(primal_obj - dual_obj);
  return res;
}

namespace {

std::string var_name(const LpProblem& p, int j) {
  const auto& n = p.var(j).name;
  return n.empty() ? "x" + std::to_string(j) : n;
}

void write_terms(std::ostream& os, const LpProblem& p,
                 const std::vector<Entry>& entries) {
  bool first = true;
  for (const Entry& e : entries) {
    if (e.value == 0.0) continue;
    if (e.value < 0) os << (first ? "- " : " - ");
    else if (!first) os << " + ";
    const double a = std::abs(e.value);
    if (a != 1.0) os << a << ' ';
    os << var_name(p, e.col);
    first = false;
  }
  if (first) os << "0 " << var_name(p, 0);
}

}  // namespace

void write_lp_format(std::ostream& os, const LpProblem& p,
                     std::span<const int> binaries) {
  const auto prec = os.precision(17);
  os << (p.sense() == Sense::kMaximize ? "Maximize\n" : "Minimize\n");
  std::vector<Entry> obj;
  for (int j = 0; j < p.num_vars(); ++j) {
    if (p.var(j).cost != 0.0) obj.push_back({j, p.var(j).cost});
  }
  os << " obj: ";
  write_terms(os, p, obj);
  os << "\nSubject To\n";
  for (int i = 0; i < p.num_rows(); ++i) {
    const Row& r = p.row(i);
    const std::string name = r.name.empty() ? "r" + std::to_string(i) : r.name;
    auto line = [&](const std::string& suffix, const char* rel, double rhs) {
      os << ' ' << name << suffix << ": ";
      write_terms(os, p, r.entries);
      os << ' ' << rel << ' ' << rhs << '\n';
    };
    switch (r.relation()) {
      case Relation::kEqual: line("", "=", r.lo); break;
      case Relation::kLessEqual: line("", "<=", r.hi); break;
      case Relation::kGreaterEqual: line("", ">=", r.lo); break;
      case Relation::kRange:
        line("_lo", ">=", r.lo);
        line("_hi", "<=", r.hi);
        break;
    }
  }
  os << "Bounds\n";
  for (int j = 0; j < p.num_vars(); ++j) {
    const Variable& v = p.var(j);
    const std::string n = var_name(p, j);
    if (std::isinf(v.lo) && std::isinf(v.hi)) {
      os << ' ' << n << " free\n";
    } else if (v.lo == v.hi) {
      os << ' ' << n << " = " << v.lo << '\n';
    } else {
      os << ' ';
      if (std::isinf(v.lo)) os << "-inf";
      else os << v.lo;
      os << " <= " << n << " <= ";
      if (std::isinf(v.hi)) os << "+inf";
      else os << v.hi;
      os << '\n';
    }
  }
  if (!binaries.empty()) {
    os << "Binaries\n";
    for (int j : binaries) os << ' ' << var_name(p, j) << '\n';
  }
  os << "End\n";
  os.precision(prec);
}

}  // namespace itp::lp
