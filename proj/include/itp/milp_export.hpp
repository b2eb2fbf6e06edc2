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

// Big-M mixed-integer model of the worst finite value, written as a debug
// dump for external MILP solvers. The solver in this library never uses it.

#ifndef ITP_MILP_EXPORT_HPP_
#define ITP_MILP_EXPORT_HPP_

#include <iosfwd>
#include <vector>

#include "itp/core.hpp"
#include "itp/lp.hpp"

namespace itp {

struct BigMModel {
  lp::LpProblem problem{lp::Sense::kMaximize};
  std::vector<int> binaries;
  double big_m = 0.0;
};

// big_m <= 0 picks a data-derived constant.
BigMModel build_big_m_model(const Instance& inst, double big_m = 0.0);

void write_big_m_model(std::ostream& os, const Instance& inst, double big_m = 0.0);

}  // namespace itp

#endif  // ITP_MILP_EXPORT_HPP_
