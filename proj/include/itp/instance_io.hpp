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

// JSON instance files:
//
//   {"mode": "le" | "eq", "m": 2, "n": 3, "name": "optional",
//    "cost":   [[[lo, hi], [lo, hi], [lo, hi]], ...],
//    "supply": [[lo, hi], ...],
//    "demand": [[lo, hi], ...]}
//
// A bare number is accepted wherever an interval is expected and read as a
// point interval. Solution files hold an m x n array of shipped amounts.

#ifndef ITP_INSTANCE_IO_HPP_
#define ITP_INSTANCE_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "itp/core.hpp"

namespace itp {

// Error{kParseError} that also records the underlying cause (for example
// kMissingField or kInvalidInterval) and the offending field path.
class ParseError : public Error {
 public:
  ParseError(Errc cause, const std::string& field, const std::string& detail);

  Errc cause() const noexcept { return cause_; }
  const std::string& field() const noexcept { return field_; }

 private:
  Errc cause_;
  std::string field_;
};

Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
// Throws Error{kIoError} when the file cannot be opened.
Instance read_instance(const std::filesystem::path& path);

void write_instance(std::ostream& out, const Instance& inst);
void write_instance(const std::filesystem::path& path, const Instance& inst);

TransportPlan parse_solution(std::istream& in, int m, int n);
TransportPlan read_solution(const std::filesystem::path& path, int m, int n);

}  // namespace itp

#endif  // ITP_INSTANCE_IO_HPP_
