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

#include "itp/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <regex>

namespace itp {

namespace {

void check_range(const IntRange& r, const char* what) {
  if (r.lo < 0 || r.lo > r.hi) {
    throw Error(Errc::kInvalidParams,
                std::string(what) + " range must satisfy 0 <= lo <= hi");
  }
}

// Integer vector proportional to `w` with the given total, rounding by
// largest remainder (ties to the lower index).
std::vector<long long> rescale(const std::vector<long long>& w, long long total) {
  const long long sum = std::accumulate(w.begin(), w.end(), 0LL);
  std::vector<long long> out(w.size());
  std::vector<std::pair<long long, std::size_t>> rem;
  long long placed = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const long long num = w[k] * total;
    out[k] = num / sum;
    placed += out[k];
    rem.push_back({num % sum, k});
  }
  std::stable_sort(rem.begin(), rem.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; placed < total; ++k, ++placed) ++out[rem[k].second];
  return out;
}

}  // namespace

Instance generate_instance(int m, int n, std::uint64_t seed,
                           const GeneratorParams& params) {
  if (m < 1 || n < 1) throw Error(Errc::kInvalidParams, "m and n must be >= 1");
  check_range(params.cost_lo, "cost_lo");
  check_range(params.cost_width, "cost_width");
  check_range(params.supply_lo, "supply_lo");
  check_range(params.demand_lo, "demand_lo");
  if (params.doubling && (params.supply_lo.hi == 0 || params.demand_lo.hi == 0)) {
    throw Error(Errc::kInvalidParams, "doubling needs positive supply and demand");
  }

  std::mt19937_64 rng(seed);
  auto draw = [&rng](const IntRange& r) {
    return std::uniform_int_distribution<long long>(r.lo, r.hi)(rng);
  };

  RawInstance raw;
  raw.m = m;
  raw.n = n;
  raw.mode = params.mode;
  raw.name = "gen-" + std::to_string(m) + "x" + std::to_string(n) + "-" +
             std::to_string(seed);
  raw.cost.assign(m, std::vector<Interval>(n));
  for (auto& row : raw.cost) {
    for (Interval& c : row) {
      const long long lo = draw(params.cost_lo);
      c = {static_cast<double>(lo), static_cast<double>(lo + draw(params.cost_width))};
    }
  }
  std::vector<long long> s(m), d(n);
  for (auto& v : s) v = draw(params.supply_lo);
  for (auto& v : d) v = draw(params.demand_lo);
  if (params.doubling) {
    if (std::accumulate(s.begin(), s.end(), 0LL) == 0) s[0] = 1;
    if (std::accumulate(d.begin(), d.end(), 0LL) == 0) d[0] = 1;
    d = rescale(d, std::accumulate(s.begin(), s.end(), 0LL));
  }
  for (long long v : s) {
    const long long hi = params.doubling ? 2 * v : v + draw({0, static_cast<int>(v)});
    raw.supply.push_back({static_cast<double>(v), static_cast<double>(hi)});
  }
  for (long long v : d) {
    const long long hi = params.doubling ? 2 * v : v + draw({0, static_cast<int>(v)});
    raw.demand.push_back({static_cast<double>(v), static_cast<double>(hi)});
  }
  return validate_instance(std::move(raw));
}

GeneratorSpec parse_generator_spec(const std::string& text) {
  static const std::regex comma(R"((\d+),(\d+),(\d+)(?:,(\d+))?)");
  static const std::regex shape(R"((\d+)x(\d+):(\d+)(?::(\d+))?)");
  std::smatch mt;
  if (!std::regex_match(text, mt, comma) && !std::regex_match(text, mt, shape)) {
    throw Error(Errc::kInvalidParams,
                "generator spec must look like 'm,n,seed[,count]' or 'MxN:seed[:count]'");
  }
  GeneratorSpec spec;
  spec.m = std::stoi(mt[1]);
  spec.n = std::stoi(mt[2]);
  spec.seed = std::stoull(mt[3]);
  if (mt[4].matched) spec.count = std::stoi(mt[4]);
  if (spec.m < 1 || spec.n < 1 || spec.count < 1) {
    throw Error(Errc::kInvalidParams, "generator spec needs m, n, count >= 1");
  }
  return spec;
}

}  // namespace itp
