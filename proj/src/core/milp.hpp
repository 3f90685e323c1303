// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lp.hpp"
#include "model.hpp"

namespace invmilo {

using ViolationOracle = std::function<double(std::span<const double>)>;

struct StopPolicy {
  std::optional<double> time_limit;  // seconds
  // Early-stop threshold tau in seconds. Once elapsed, the search returns the
  // maximum-violation incumbent found so far, or the first violated one found
  // afterwards.
  std::optional<double> early_stop_tau;
  ViolationOracle violation_oracle;  // optional
  // An incumbent counts as violated when oracle(x) > violation_min.
  double violation_min = 0.0;
  double big_violation_threshold = 1e10;
};

enum class MilpStatus {
  Optimal,
  EarlyStopFeasible,
  Infeasible,
  Unbounded,
  UnboundedViolationEscape,
  TimeLimit,
};

const char* to_string(MilpStatus status);

struct MilpOutcome {
  MilpStatus status = MilpStatus::Infeasible;
  std::vector<double> incumbent;  // empty when none
  double objective = kInf;
  double best_bound = -kInf;
  double incumbent_violation = 0.0;  // oracle value, when an oracle is set
  std::size_t nodes = 0;
  double wall_seconds = 0.0;
};

using IncumbentListener =
    std::function<void(std::span<const double> x, double objective)>;

// minimize objective . x over the problem's region.
//
// Branching: most fractional variable, lowest index on ties, down child
// before up child. Node selection: best bound, FIFO on ties. Every LP is
// solved from scratch, so the search is deterministic unless the policy has
// time-based fields. Wall-clock checks happen at node boundaries.
MilpOutcome solve_milp(const ForwardProblem& problem,
                       std::span<const double> objective,
                       const StopPolicy& policy = {},
                       const Tolerances& tol = {});

// As solve_milp; every new incumbent is passed to the listener in discovery
// order before the call returns.
MilpOutcome solve_milp_with_incumbent_stream(const ForwardProblem& problem,
                                             std::span<const double> objective,
                                             const StopPolicy& policy,
                                             const Tolerances& tol,
                                             const IncumbentListener& listener);

// LP relaxation of the problem under the given objective.
LinearProgram relaxation(const ForwardProblem& problem,
                         std::span<const double> objective);

}  // namespace invmilo
