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

#ifndef ITP_GENERATOR_HPP_
#define ITP_GENERATOR_HPP_

#include <cstdint>
#include <string>

#include "itp/core.hpp"

namespace itp {

struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct GeneratorParams {
  IntRange cost_lo{1, 20};
  IntRange cost_width{0, 10};
  IntRange supply_lo{10, 50};
  IntRange demand_lo{10, 50};
  // Upper bounds are exactly twice the lower ones and the lower demands are
  // rescaled so that total upper supply equals total upper demand. Without
  // doubling each upper bound is lo + U{0..lo}.
  bool doubling = true;
  Mode mode = Mode::kSupplyLeq;
};

// Deterministic for a given (m, n, seed, params). Throws Error{kInvalidParams}.
Instance generate_instance(int m, int n, std::uint64_t seed,
                           const GeneratorParams& params = {});

// Parses "m,n,seed[,count]" or "MxN:seed[:count]"; used by `itp bench gen:...`.
struct GeneratorSpec {
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;
  int count = 1;
};
GeneratorSpec parse_generator_spec(const std::string& text);

}  // namespace itp

#endif  // ITP_GENERATOR_HPP_
