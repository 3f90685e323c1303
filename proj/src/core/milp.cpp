// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#include "milp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include "error.hpp"

namespace invmilo {

const char* to_string(MilpStatus status) {
  switch (status) {
    case MilpStatus::Optimal: return "Optimal";
    case MilpStatus::EarlyStopFeasible: return "EarlyStopFeasible";
    case MilpStatus::Infeasible: return "Infeasible";
    case MilpStatus::Unbounded: return "Unbounded";
    case MilpStatus::UnboundedViolationEscape: return "UnboundedViolationEscape";
    case MilpStatus::TimeLimit: return "TimeLimit";
  }
  return "Unknown";
}

LinearProgram relaxation(const ForwardProblem& problem,
                         std::span<const double> objective) {
  LinearProgram lp;
  lp.objective.assign(objective.begin(), objective.end());
  lp.lower = problem.lower;
  lp.upper = problem.upper;
  lp.rows.reserve(problem.rows.size());
  for (const auto& row : problem.rows) {
    LpRow r;
    r.coeffs = row.coeffs;
    switch (row.relation) {
      case Relation::GreaterEqual: r.lower = row.rhs; r.upper = kInf; break;
      case Relation::LessEqual: r.lower = -kInf; r.upper = row.rhs; break;
      case Relation::Equal: r.lower = r.upper = row.rhs; break;
    }
    lp.rows.push_back(std::move(r));
  }
  return lp;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Node {
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> x;  // LP solution
  double bound = -kInf;
  std::size_t seq = 0;
};

struct WorseNode {
  bool operator()(const std::unique_ptr<Node>& a,
                  const std::unique_ptr<Node>& b) const {
    if (a->bound != b->bound) return a->bound > b->bound;
    return a->seq > b->seq;
  }
};

struct Incumbent {
  std::vector<double> x;
  double objective = kInf;
  double violation = 0.0;
};

class BranchAndBound {
 public:
  BranchAndBound(const ForwardProblem& problem, std::span<const double> objective,
                 const StopPolicy& policy, const Tolerances& tol,
                 const IncumbentListener* listener, Clock::time_point start)
      : problem_(problem),
        objective_(objective.begin(), objective.end()),
        policy_(policy),
        tol_(tol),
        listener_(listener),
        start_(start),
        base_(relaxation(problem, objective)) {}

  MilpOutcome run() {
    if (deadline_passed()) return finish(MilpStatus::TimeLimit);
    check_tau();

    auto root = std::make_unique<Node>();
    root->lower = problem_.lower;
    root->upper = problem_.upper;
    const LpOutcome root_lp = solve_node(*root);
    if (root_lp.status == LpStatus::Infeasible) return finish(MilpStatus::Infeasible);
    if (root_lp.status == LpStatus::Unbounded) {
      if (policy_.violation_oracle) return escape(root_lp.x);
      return finish(MilpStatus::Unbounded);
    }
    root->x = root_lp.x;
    root->bound = root_lp.objective;
    if (auto done = admit(std::move(root))) return *done;

    while (!open_.empty()) {
      if (deadline_passed()) return finish(MilpStatus::TimeLimit);
      if (auto done = check_tau()) return *done;
      std::pop_heap(open_.begin(), open_.end(), WorseNode{});
      std::unique_ptr<Node> node = std::move(open_.back());
      open_.pop_back();
      if (node->bound >= incumbent_.objective - tol_.mip_gap) continue;

      const std::size_t j = branching_variable(node->x);
      const double v = node->x[j];
      auto down = std::make_unique<Node>();
      down->lower = node->lower;
      down->upper = node->upper;
      down->upper[j] = std::floor(v);
      auto up = std::make_unique<Node>();
      up->lower = std::move(node->lower);
      up->upper = std::move(node->upper);
      up->lower[j] = std::ceil(v);
      for (auto* child : {&down, &up}) {
        const LpOutcome lp = solve_node(**child);
        if (lp.status == LpStatus::Infeasible) continue;
        if (lp.status == LpStatus::Unbounded) {
          if (policy_.violation_oracle) return escape(lp.x);
          return finish(MilpStatus::Unbounded);
        }
        (*child)->x = lp.x;
        (*child)->bound = lp.objective;
        if (auto done = admit(std::move(*child))) return *done;
      }
    }
    if (incumbent_.x.empty()) return finish(MilpStatus::Infeasible);
    return finish(MilpStatus::Optimal);
  }

  std::size_t nodes() const { return nodes_; }

 private:
  LpOutcome solve_node(const Node& node) {
    ++nodes_;
    for (std::size_t j = 0; j < problem_.n; ++j) {
      if (node.lower[j] > node.upper[j]) {
        LpOutcome infeasible;
        infeasible.status = LpStatus::Infeasible;
        return infeasible;
      }
    }
    base_.lower = node.lower;
    base_.upper = node.upper;
    return solve_lp(base_);
  }

  // Returns problem_.n when x is integral on every integer variable.
  std::size_t branching_variable(const std::vector<double>& x) const {
    std::size_t best = problem_.n;
    double best_frac = tol_.integrality;
    for (std::size_t j = 0; j < problem_.n; ++j) {
      if (!problem_.is_integer[j]) continue;
      const double f = x[j] - std::floor(x[j]);
      const double dist = std::min(f, 1.0 - f);
      if (dist > best_frac) {
        best_frac = dist;
        best = j;
      }
    }
    return best;
  }

  // Queues a fractional node or records an integral one. Returns an outcome
  // when the early-stop rule ends the search.
  std::optional<MilpOutcome> admit(std::unique_ptr<Node> node) {
    if (node->bound >= incumbent_.objective - tol_.mip_gap) return std::nullopt;
    if (branching_variable(node->x) != problem_.n) {
      node->seq = next_seq_++;
      open_.push_back(std::move(node));
      std::push_heap(open_.begin(), open_.end(), WorseNode{});
      return std::nullopt;
    }
    std::vector<double> x = std::move(node->x);
    for (std::size_t j = 0; j < problem_.n; ++j) {
      if (problem_.is_integer[j]) x[j] = std::round(x[j]);
    }
    double obj = 0.0;
    for (std::size_t j = 0; j < problem_.n; ++j) obj += objective_[j] * x[j];
    incumbent_.x = x;
    incumbent_.objective = obj;
    incumbent_.violation =
        policy_.violation_oracle ? policy_.violation_oracle(x) : 0.0;
    history_.push_back(incumbent_);
    if (listener_ && *listener_) (*listener_)(x, obj);
    if (tau_passed_ && policy_.violation_oracle &&
        incumbent_.violation > policy_.violation_min) {
      return finish(MilpStatus::EarlyStopFeasible);
    }
    return std::nullopt;
  }

  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  bool deadline_passed() const {
    return policy_.time_limit && elapsed() >= *policy_.time_limit;
  }

  std::optional<MilpOutcome> check_tau() {
    if (tau_passed_ || !policy_.early_stop_tau || !policy_.violation_oracle) {
      return std::nullopt;
    }
    if (elapsed() < *policy_.early_stop_tau) return std::nullopt;
    tau_passed_ = true;
    const Incumbent* best = nullptr;
    for (const auto& inc : history_) {
      if (inc.violation > policy_.violation_min &&
          (!best || inc.violation > best->violation)) {
        best = &inc;
      }
    }
    if (!best) return std::nullopt;
    incumbent_ = *best;
    return finish(MilpStatus::EarlyStopFeasible);
  }

  MilpOutcome finish(MilpStatus status) {
    MilpOutcome out;
    out.status = status;
    out.incumbent = incumbent_.x;
    out.objective = incumbent_.x.empty() ? kInf : incumbent_.objective;
    out.incumbent_violation = incumbent_.violation;
    double bound = incumbent_.x.empty() ? kInf : incumbent_.objective;
    if (status != MilpStatus::Optimal) {
      if (!open_.empty()) bound = std::min(bound, open_.front()->bound);
      if (status == MilpStatus::Unbounded) bound = -kInf;
    }
    out.best_bound = bound;
    out.nodes = nodes_;
    out.wall_seconds = elapsed();
    return out;
  }

  // Unbounded relaxation with an oracle present: solve over boxes of radius
  // 1, 2, 4, ... around the relaxation's feasible point until an incumbent's
  // violation exceeds the escape threshold.
  MilpOutcome escape(const std::vector<double>& anchor) {
    std::vector<double> center = anchor;
    for (std::size_t j = 0; j < problem_.n; ++j) {
      if (problem_.is_integer[j]) center[j] = std::round(center[j]);
    }
    StopPolicy inner;
    inner.violation_oracle = policy_.violation_oracle;
    inner.violation_min = policy_.violation_min;
    ForwardProblem boxed = problem_;
    for (int k = 0; k < 63; ++k) {
      const double radius = std::ldexp(1.0, k);
      for (std::size_t j = 0; j < problem_.n; ++j) {
        boxed.lower[j] = std::max(problem_.lower[j], center[j] - radius);
        boxed.upper[j] = std::min(problem_.upper[j], center[j] + radius);
      }
      if (policy_.time_limit) {
        inner.time_limit = std::max(0.0, *policy_.time_limit - elapsed());
      }
      BranchAndBound sub(boxed, objective_, inner, tol_, listener_, Clock::now());
      MilpOutcome r = sub.run();
      nodes_ += sub.nodes();
      if (r.status == MilpStatus::TimeLimit) {
        incumbent_ = {r.incumbent, r.objective, r.incumbent_violation};
        return finish(MilpStatus::TimeLimit);
      }
      if (r.incumbent.empty()) continue;
      if (r.incumbent_violation > policy_.big_violation_threshold) {
        incumbent_ = {r.incumbent, r.objective, r.incumbent_violation};
        MilpOutcome out = finish(MilpStatus::UnboundedViolationEscape);
        out.best_bound = -kInf;
        return out;
      }
    }
    return finish(MilpStatus::Unbounded);
  }

  const ForwardProblem& problem_;
  std::vector<double> objective_;
  const StopPolicy& policy_;
  const Tolerances& tol_;
  const IncumbentListener* listener_;
  Clock::time_point start_;
  LinearProgram base_;
  std::vector<std::unique_ptr<Node>> open_;  // heap ordered by WorseNode
  Incumbent incumbent_;
  std::vector<Incumbent> history_;
  std::size_t nodes_ = 0;
  std::size_t next_seq_ = 0;
  bool tau_passed_ = false;
};

}  // namespace

MilpOutcome solve_milp(const ForwardProblem& problem,
                       std::span<const double> objective,
                       const StopPolicy& policy, const Tolerances& tol) {
  return solve_milp_with_incumbent_stream(problem, objective, policy, tol, {});
}

MilpOutcome solve_milp_with_incumbent_stream(const ForwardProblem& problem,
                                             std::span<const double> objective,
                                             const StopPolicy& policy,
                                             const Tolerances& tol,
                                             const IncumbentListener& listener) {
  if (objective.size() != problem.n) {
    throw Error(ErrorCode::DimensionMismatch,
                "solve_milp: objective length does not match problem.n");
  }
  problem.check_well_formed();
  BranchAndBound bb(problem, objective, policy, tol, &listener, Clock::now());
  return bb.run();
}

}  // namespace invmilo
