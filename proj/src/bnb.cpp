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

// Branch-and-bound over the implications
//
//   x_ij > 0                  =>  u_i + v_j = upper cost_ij
//   sum_j x_ij < lower s_i    =>  u_i = 0                      (<= mode)
//
// A node bound is the minimum of two relaxations: the x-part (largest upper
// cost over the node's primal rows) and a dual-side bound, the largest
// s_lo'u + d_hi'v over the node's dual region with v >= 0. Every optimal dual
// of a pattern-consistent plan can be moved into that region without lowering
// its value, so the bound is valid in both modes.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <exception>
#include <memory>
#include <mutex>
#include <queue>
#include <set>

#include "itp/lp.hpp"
#include "itp/parallel.hpp"
#include "itp/properties.hpp"
#include "itp/scenario.hpp"
#include "itp/value_range.hpp"
#include "worst_finite_internal.hpp"

namespace itp {

namespace {

enum PairState : char { kPairFree = 0, kPairZero = 1, kPairTight = 2 };
enum SourceState : char { kSourceFree = 0, kSourceUZero = 1, kSourceSlack = 2 };

// Solution of a node's x-part together with the scenario it induces.
struct XPart {
  bool feasible = false;
  double value = 0.0;
  TransportPlan x;
  std::vector<double> supply;  // induced scenario
  std::vector<double> demand;
  // Optimal value of the induced scenario at upper costs: a real scenario
  // value, so a valid incumbent candidate.
  bool heuristic_ok = false;
  ScenarioSolution heuristic;
};

struct Node {
  std::vector<char> pairs;
  std::vector<char> sources;
  double bound = kInfinity;  // provisional until evaluated
  int depth = 0;
  std::int64_t id = 0;
  std::shared_ptr<const XPart> xpart;      // inherited when unchanged
  std::optional<double> dual_bound;        // inherited when unchanged
};

struct Candidate {
  double value = -kInfinity;
  TransportPlan plan;
  DualPair duals;
};

ScenarioSolution solve_robust(const TransportLp& t) {
  try {
    return solve_transport(t);
  } catch (const Error& e) {
    if (e.code() != Errc::kNumericalFailure) throw;
    return solve_transport(t, lp::Arithmetic::kRational);
  }
}

lp::LpOutcome solve_robust(const lp::LpProblem& p) {
  try {
    return lp::solve_lp(p);
  } catch (const Error& e) {
    if (e.code() != Errc::kNumericalFailure) throw;
    return lp::solve_lp(p, lp::Arithmetic::kRational);
  }
}

class NodePool {
 public:
  explicit NodePool(NodeOrder order) : order_(order) {}

  bool empty() const { return order_ == NodeOrder::kBestBound ? heap_.empty() : stack_.empty(); }

  void push(Node n) {
    bounds_.insert(n.bound);
    if (order_ == NodeOrder::kBestBound) {
      heap_.push(std::move(n));
    } else {
      stack_.push_back(std::move(n));
    }
  }

  Node pop() {
    Node n;
    if (order_ == NodeOrder::kBestBound) {
      n = heap_.top();
      heap_.pop();
    } else {
      n = std::move(stack_.back());
      stack_.pop_back();
    }
    bounds_.erase(bounds_.find(n.bound));
    return n;
  }

  double max_bound() const { return bounds_.empty() ? -kInfinity : *bounds_.rbegin(); }

 private:
  struct Before {
    bool operator()(const Node& a, const Node& b) const {
      // priority_queue puts the largest element on top.
      if (a.bound != b.bound) return a.bound < b.bound;
      if (a.depth != b.depth) return a.depth < b.depth;
      return a.id > b.id;
    }
  };

  NodeOrder order_;
  std::priority_queue<Node, std::vector<Node>, Before> heap_;
  std::vector<Node> stack_;
  std::multiset<double> bounds_;
};

class Search {
 public:
  Search(const Instance& inst, const BnbConfig& config)
      : inst_(inst), config_(config), m_(inst.m()), n_(inst.n()),
        leq_(inst.mode() == Mode::kSupplyLeq), pool_(config.node_order),
        start_(std::chrono::steady_clock::now()) {}

  WorstFiniteResult run();

 private:
  struct Outcome {
    std::vector<Node> children;
    std::vector<Candidate> candidates;
    bool pruned_by_bound = false;
    double bound = kInfinity;
    std::int64_t lp_solves = 0;
  };

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  double prune_level(double inc) const {
    return inc + config_.gap_tol * std::max(1.0, std::abs(inc));
  }

  std::shared_ptr<const XPart> solve_xpart(const Node& node, std::int64_t* lps) const;
  std::optional<double> solve_dual_bound(const Node& node, bool* empty,
                                         std::int64_t* lps) const;
  Outcome process(Node node, double incumbent) const;

  void offer(Candidate&& c);            // requires mu_
  double global_bound_locked() const;   // requires mu_
  void log_locked(bool force);          // requires mu_
  void worker();

  const Instance& inst_;
  const BnbConfig& config_;
  const int m_;
  const int n_;
  const bool leq_;

  std::mutex mu_;
  std::condition_variable cv_;
  NodePool pool_;
  std::multiset<double> active_bounds_;
  int active_ = 0;
  bool stop_ = false;
  bool limit_hit_ = false;
  std::exception_ptr failure_;
  std::int64_t next_id_ = 1;
  std::int64_t nodes_ = 0;
  std::int64_t lp_solves_ = 0;
  double pruned_max_ = -kInfinity;
  Candidate best_;
  double best_time_ = 0.0;
  double reported_bound_ = kInfinity;
  std::int64_t last_log_nodes_ = -1;
  std::vector<ConvergencePoint> log_;
  const std::chrono::steady_clock::time_point start_;
};

std::shared_ptr<const XPart> Search::solve_xpart(const Node& node,
                                                 std::int64_t* lps) const {
  auto xp = std::make_shared<XPart>();
  lp::LpProblem p(lp::Sense::kMaximize);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j)
      p.add_variable(0.0, node.pairs[i * n_ + j] == kPairZero ? 0.0 : lp::kInf,
                     inst_.cost(i, j).hi);
  for (int i = 0; i < m_; ++i) {
    std::vector<lp::Entry> row;
    for (int j = 0; j < n_; ++j) row.push_back({i * n_ + j, 1.0});
    const bool lower = !leq_ || node.sources[i] == kSourceSlack;
    p.add_range_row(std::move(row), lower ? inst_.supply(i).lo : -lp::kInf,
                    inst_.supply(i).hi);
  }
  for (int j = 0; j < n_; ++j) {
    std::vector<lp::Entry> col;
    for (int i = 0; i < m_; ++i) col.push_back({i * n_ + j, 1.0});
    p.add_range_row(std::move(col), inst_.demand(j).lo, inst_.demand(j).hi);
  }
  ++*lps;
  const lp::LpOutcome out = solve_robust(p);
  if (out.status != lp::Status::kOptimal) return xp;
  xp->feasible = true;
  xp->value = out.value;
  xp->x = TransportPlan(m_, n_);
  for (int k = 0; k < m_ * n_; ++k) xp->x(k / n_, k % n_) = std::max(0.0, out.primal[k]);
  induced_rhs(inst_, xp->x, &xp->supply, &xp->demand);

  TransportLp t;
  t.mode = inst_.mode();
  t.cost = inst_.cost_hi();
  t.supply = xp->supply;
  t.demand = xp->demand;
  ++*lps;
  xp->heuristic = solve_robust(t);
  xp->heuristic_ok = xp->heuristic.optimal();
  return xp;
}

// Largest s_lo'u + d_hi'v over the node's dual region intersected with
// v >= 0, computed through its primal min c_hi'y, sum_j y_ij <= s_lo_i,
// sum_i y_ij >= d_hi_j. Unbounded primal means the region is empty.
std::optional<double> Search::solve_dual_bound(const Node& node, bool* empty,
                                               std::int64_t* lps) const {
  TransportLp t;
  t.mode = Mode::kSupplyLeq;
  t.cost = inst_.cost_hi();
  t.supply = inst_.supply_lo();
  t.demand = inst_.demand_hi();
  t.demand_relation = lp::Relation::kGreaterEqual;
  t.free_pair.resize(m_ * n_);
  t.drop_supply.resize(m_);
  for (int k = 0; k < m_ * n_; ++k) t.free_pair[k] = node.pairs[k] == kPairTight;
  for (int i = 0; i < m_; ++i) t.drop_supply[i] = node.sources[i] == kSourceUZero;
  ++*lps;
  const ScenarioSolution sol = solve_robust(t);
  *empty = sol.status == lp::Status::kUnbounded;
  if (sol.status != lp::Status::kOptimal) return std::nullopt;
  return sol.value;
}

Search::Outcome Search::process(Node node, double incumbent) const {
  Outcome out;
  if (!node.xpart) node.xpart = solve_xpart(node, &out.lp_solves);
  const XPart& xp = *node.xpart;
  if (!xp.feasible) return out;
  if (xp.heuristic_ok) {
    out.candidates.push_back({xp.heuristic.value, xp.heuristic.plan, xp.heuristic.duals});
  }
  if (!node.dual_bound) {
    bool empty = false;
    const std::optional<double> db = solve_dual_bound(node, &empty, &out.lp_solves);
    if (empty) return out;
    node.dual_bound = db ? *db : kInfinity;
  }
  out.bound = std::min({node.bound, xp.value, *node.dual_bound});
  for (const Candidate& c : out.candidates) incumbent = std::max(incumbent, c.value);
  if (out.bound <= prune_level(incumbent)) {
    out.pruned_by_bound = true;
    return out;
  }

  // Duals that best explain x within the node's dual region.
  TransportLp t;
  t.mode = inst_.mode();
  t.cost = inst_.cost_hi();
  t.supply = xp.supply;
  t.demand = xp.demand;
  t.free_pair.resize(m_ * n_);
  t.drop_supply.resize(m_);
  for (int k = 0; k < m_ * n_; ++k) t.free_pair[k] = node.pairs[k] == kPairTight;
  for (int i = 0; i < m_; ++i) t.drop_supply[i] = node.sources[i] == kSourceUZero;
  ++out.lp_solves;
  const ScenarioSolution check = solve_robust(t);
  if (check.status == lp::Status::kUnbounded) return out;

  const double vt = config_.violation_tol;
  int pick_pair = -1;
  int pick_source = -1;
  double pick_viol = 0.0;
  double pick_width = -1.0;
  bool any_free = false;
  auto consider = [&](double viol, double width, int pair, int source) {
    if (viol > pick_viol || (viol == pick_viol && width > pick_width)) {
      pick_viol = viol;
      pick_width = width;
      pick_pair = pair;
      pick_source = source;
    }
  };
  if (check.optimal()) {
    const DualPair& d = check.duals;
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) {
        const int k = i * n_ + j;
        if (node.pairs[k] != kPairFree) continue;
        any_free = true;
        const double slack = inst_.cost(i, j).hi - d.u[i] - d.v[j];
        if (xp.x(i, j) > vt && slack > vt) {
          consider(xp.x(i, j) * slack, inst_.cost(i, j).width(), k, -1);
        }
      }
    }
    if (leq_) {
      for (int i = 0; i < m_; ++i) {
        if (node.sources[i] != kSourceFree) continue;
        any_free = true;
        const double gap = inst_.supply(i).lo - row_sum(xp.x, i);
        if (gap > vt && -d.u[i] > vt) consider(gap * -d.u[i], 0.0, -1, i);
      }
    }
    if (pick_pair < 0 && pick_source < 0) {
      // Every implication holds: x is optimal for its induced scenario.
      out.candidates.push_back({dot(inst_.cost_hi(), xp.x), xp.x, d});
      return out;
    }
  } else {
    // The check LP failed numerically; branch on the first open item.
    for (int k = 0; k < m_ * n_ && pick_pair < 0; ++k)
      if (node.pairs[k] == kPairFree) pick_pair = k;
    for (int i = 0; leq_ && i < m_ && pick_pair < 0 && pick_source < 0; ++i)
      if (node.sources[i] == kSourceFree) pick_source = i;
    any_free = pick_pair >= 0 || pick_source >= 0;
    if (!any_free) return out;
  }

  // Dual-side child first: it keeps x and only restricts (u, v).
  Node dual_child;
  dual_child.pairs = node.pairs;
  dual_child.sources = node.sources;
  dual_child.bound = out.bound;
  dual_child.depth = node.depth + 1;
  dual_child.xpart = node.xpart;
  Node primal_child = dual_child;
  primal_child.xpart.reset();
  primal_child.dual_bound = node.dual_bound;
  if (pick_pair >= 0) {
    dual_child.pairs[pick_pair] = kPairTight;
    primal_child.pairs[pick_pair] = kPairZero;
  } else {
    dual_child.sources[pick_source] = kSourceUZero;
    primal_child.sources[pick_source] = kSourceSlack;
  }
  out.children.push_back(std::move(dual_child));
  out.children.push_back(std::move(primal_child));
  return out;
}

void Search::offer(Candidate&& c) {
  if (c.value > best_.value) {
    best_ = std::move(c);
    best_time_ = elapsed();
    log_locked(true);
  }
}

double Search::global_bound_locked() const {
  double b = std::max({best_.value, pruned_max_, pool_.max_bound()});
  if (!active_bounds_.empty()) b = std::max(b, *active_bounds_.rbegin());
  return b;
}

void Search::log_locked(bool force) {
  if (!force && nodes_ - last_log_nodes_ < 1000) return;
  last_log_nodes_ = nodes_;
  reported_bound_ = std::min(reported_bound_, global_bound_locked());
  const double bound = std::max(reported_bound_, best_.value);
  log_.push_back({elapsed(), best_.value, bound, nodes_});
}

void Search::worker() {
  std::unique_lock<std::mutex> lock(mu_);
  for (;;) {
    cv_.wait(lock, [&] { return stop_ || !pool_.empty() || active_ == 0; });
    if (stop_ || (pool_.empty() && active_ == 0)) break;
    if ((config_.time_limit > 0 && elapsed() >= config_.time_limit) ||
        (config_.node_limit > 0 && nodes_ >= config_.node_limit)) {
      stop_ = true;
      limit_hit_ = true;
      cv_.notify_all();
      break;
    }
    Node node = pool_.pop();
    const double provisional = node.bound;
    if (provisional <= prune_level(best_.value)) {
      pruned_max_ = std::max(pruned_max_, provisional);
      continue;
    }
    ++nodes_;
    ++active_;
    auto active_it = active_bounds_.insert(provisional);
    const double incumbent = best_.value;
    lock.unlock();

    Outcome out;
    try {
      out = process(std::move(node), incumbent);
    } catch (...) {
      lock.lock();
      if (!failure_) failure_ = std::current_exception();
      stop_ = true;
      --active_;
      active_bounds_.erase(active_it);
      cv_.notify_all();
      break;
    }

    lock.lock();
    lp_solves_ += out.lp_solves;
    for (Candidate& c : out.candidates) offer(std::move(c));
    if (out.pruned_by_bound) pruned_max_ = std::max(pruned_max_, out.bound);
    for (Node& child : out.children) {
      child.id = next_id_++;
      pool_.push(std::move(child));
    }
    active_bounds_.erase(active_it);
    --active_;
    log_locked(false);
    cv_.notify_all();
  }
}

WorstFiniteResult Search::run() {
  const InitialScenario init = initial_scenario(inst_);
  best_ = {init.solution.value, init.solution.plan, init.solution.duals};
  lp_solves_ = 1;

  Node root;
  root.pairs.assign(m_ * n_, kPairFree);
  root.sources.assign(m_, kSourceFree);
  root.id = 0;
  pool_.push(std::move(root));
  log_.push_back({elapsed(), best_.value, kInfinity, 0});

  const int threads = resolve_threads(config_.threads);
  if (threads == 1) {
    worker();
  } else {
#pragma omp parallel num_threads(threads)
    worker();
  }
  if (failure_) std::rethrow_exception(failure_);

  WorstFiniteResult r;
  r.has_incumbent = true;
  r.value = best_.value;
  r.plan = std::move(best_.plan);
  r.duals = std::move(best_.duals);
  r.proven_optimal = !limit_hit_ && pool_.empty();
  log_locked(true);
  r.upper_bound = log_.back().upper_bound;
  r.log = std::move(log_);
  r.stats.nodes = nodes_;
  r.stats.lp_solves = lp_solves_;
  r.stats.wall_seconds = elapsed();
  r.stats.best_found_seconds = best_time_;
  detail::finalize_result(inst_, &r);
  return r;
}

}  // namespace

WorstFiniteResult worst_finite_bnb(const Instance& inst, const BnbConfig& config) {
  detail::require_weakly_feasible(inst);
  Search search(inst, config);
  return search.run();
}

}  // namespace itp
