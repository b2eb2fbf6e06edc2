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

#include "itp/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace itp {

using nlohmann::json;

ParseError::ParseError(Errc cause, const std::string& field,
                       const std::string& detail)
    : Error(Errc::kParseError,
            (field.empty() ? std::string() : field + ": ") +
                std::string(errc_name(cause)) + ": " + detail),
      cause_(cause), field_(field) {}

namespace {

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(Errc::kMissingField, key, "required field is absent");
  }
  return *it;
}

double number(const json& v, const std::string& field) {
  if (!v.is_number()) throw ParseError(Errc::kParseError, field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(Errc::kParseError, field, "not finite");
  return x;
}

int dimension(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ParseError(Errc::kParseError, key, "expected a positive integer");
  }
  return v.get<int>();
}

Interval interval(const json& v, const std::string& field) {
  if (v.is_number()) {
    const double x = number(v, field);
    return {x, x};
  }
  if (!v.is_array() || v.size() != 2) {
    throw ParseError(Errc::kParseError, field, "expected [lo, hi]");
  }
  Interval iv{number(v[0], field + "[0]"), number(v[1], field + "[1]")};
  if (iv.lo > iv.hi) throw ParseError(Errc::kInvalidInterval, field, "lo > hi");
  if (iv.lo < 0.0) throw ParseError(Errc::kNegativeBound, field, "negative bound");
  return iv;
}

std::vector<Interval> interval_vector(const json& obj, const char* key,
                                      int expected) {
  const json& v = require(obj, key);
  if (!v.is_array()) throw ParseError(Errc::kParseError, key, "expected an array");
  if (static_cast<int>(v.size()) != expected) {
    throw ParseError(Errc::kDimensionMismatch, key,
                     "expected " + std::to_string(expected) + " entries, got " +
                         std::to_string(v.size()));
  }
  std::vector<Interval> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(interval(v[k], std::string(key) + "[" + std::to_string(k) + "]"));
  }
  return out;
}

json parse_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(Errc::kParseError, "", e.what());
  }
}

Instance from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError(Errc::kParseError, "", "expected an object");
  RawInstance raw;
  const json& mode = require(doc, "mode");
  if (mode == "le") {
    raw.mode = Mode::kSupplyLeq;
  } else if (mode == "eq") {
    raw.mode = Mode::kSupplyEq;
  } else {
    throw ParseError(Errc::kParseError, "mode", "expected \"le\" or \"eq\"");
  }
  raw.m = dimension(doc, "m");
  raw.n = dimension(doc, "n");
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ParseError(Errc::kParseError, "name", "expected a string");
    raw.name = it->get<std::string>();
  }
  const json& cost = require(doc, "cost");
  if (!cost.is_array() || static_cast<int>(cost.size()) != raw.m) {
    throw ParseError(Errc::kDimensionMismatch, "cost",
                     "expected " + std::to_string(raw.m) + " rows");
  }
  for (int i = 0; i < raw.m; ++i) {
    const std::string row_field = "cost[" + std::to_string(i) + "]";
    if (!cost[i].is_array() || static_cast<int>(cost[i].size()) != raw.n) {
      throw ParseError(Errc::kDimensionMismatch, row_field,
                       "expected " + std::to_string(raw.n) + " entries");
    }
    std::vector<Interval> row;
    for (int j = 0; j < raw.n; ++j) {
      row.push_back(interval(cost[i][j], row_field + "[" + std::to_string(j) + "]"));
    }
    raw.cost.push_back(std::move(row));
  }
  raw.supply = interval_vector(doc, "supply", raw.m);
  raw.demand = interval_vector(doc, "demand", raw.n);
  return validate_instance(std::move(raw));
}

json pair(const Interval& iv) { return json::array({iv.lo, iv.hi}); }

}  // namespace

Instance parse_instance(std::istream& in) { return from_json(parse_json(in)); }

Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIoError, "cannot open " + path.string());
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  json doc;
  doc["mode"] = inst.mode() == Mode::kSupplyLeq ? "le" : "eq";
  if (!inst.name().empty()) doc["name"] = inst.name();
  doc["m"] = inst.m();
  doc["n"] = inst.n();
  json cost = json::array();
  for (int i = 0; i < inst.m(); ++i) {
    json row = json::array();
    for (int j = 0; j < inst.n(); ++j) row.push_back(pair(inst.cost(i, j)));
    cost.push_back(std::move(row));
  }
  doc["cost"] = std::move(cost);
  json supply = json::array();
  for (const Interval& iv : inst.supply()) supply.push_back(pair(iv));
  doc["supply"] = std::move(supply);
  json demand = json::array();
  for (const Interval& iv : inst.demand()) demand.push_back(pair(iv));
  doc["demand"] = std::move(demand);
  out << doc.dump(1) << '\n';
}

void write_instance(const std::filesystem::path& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::kIoError, "cannot write " + path.string());
  write_instance(out, inst);
  if (!out) throw Error(Errc::kIoError, "failed writing " + path.string());
}

TransportPlan parse_solution(std::istream& in, int m, int n) {
  json doc = parse_json(in);
  if (doc.is_object()) doc = require(doc, "x");
  if (!doc.is_array() || static_cast<int>(doc.size()) != m) {
    throw ParseError(Errc::kDimensionMismatch, "x",
                     "expected " + std::to_string(m) + " rows");
  }
  TransportPlan x(m, n);
  for (int i = 0; i < m; ++i) {
    const std::string row_field = "x[" + std::to_string(i) + "]";
    if (!doc[i].is_array() || static_cast<int>(doc[i].size()) != n) {
      throw ParseError(Errc::kDimensionMismatch, row_field,
                       "expected " + std::to_string(n) + " entries");
    }
    for (int j = 0; j < n; ++j) {
      x(i, j) = number(doc[i][j], row_field + "[" + std::to_string(j) + "]");
    }
  }
  return x;
}

TransportPlan read_solution(const std::filesystem::path& path, int m, int n) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIoError, "cannot open " + path.string());
  return parse_solution(in, m, n);
}

}  // namespace itp
