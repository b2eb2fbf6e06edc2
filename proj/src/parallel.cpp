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

#include "itp/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>

namespace itp {

int default_threads() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("ITP_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return std::max(n, 1);
}

int resolve_threads(int requested) {
  return requested > 0 ? requested : default_threads();
}

}  // namespace itp
