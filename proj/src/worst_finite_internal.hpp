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

#ifndef ITP_SRC_WORST_FINITE_INTERNAL_HPP_
#define ITP_SRC_WORST_FINITE_INTERNAL_HPP_

#include "itp/worst_finite.hpp"

namespace itp::detail {

// Fills scenario, shipped totals and the paradox flag from the incumbent.
void finalize_result(const Instance& inst, WorstFiniteResult* r);

void require_weakly_feasible(const Instance& inst);

}  // namespace itp::detail

#endif  // ITP_SRC_WORST_FINITE_INTERNAL_HPP_
