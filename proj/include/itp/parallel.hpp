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

#ifndef ITP_PARALLEL_HPP_
#define ITP_PARALLEL_HPP_

namespace itp {

// Worker count for parallel kernels: OpenMP's maximum, capped by the
// ITP_THREADS environment variable when it is set to a positive integer.
int default_threads();

// Resolves a requested count: <= 0 means default_threads().
int resolve_threads(int requested);

}  // namespace itp

#endif  // ITP_PARALLEL_HPP_
