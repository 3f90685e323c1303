// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

// The master problem: the closest cost vector to c0 (1-norm) that keeps
// x_hat optimal against every point collected so far.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "model.hpp"

namespace invmilo {

// A linear restriction on the cost vector itself: coeffs . c (relation) rhs.
struct CostConstraint {
  std::vector<SparseEntry> coeffs;
  Relation relation = Relation::GreaterEqual;
  double rhs = 0.0;
};

struct MasterConfig {
  // Adds y^T A = c, y >= 0 over the forward problem's >= rows (bounds
  // included), which keeps candidates away from unbounded forward problems.
  bool use_duality_constraints = false;
  std::vector<CostConstraint> extra_c_constraints;
};

enum class MasterStatus { Optimal, Infeasible };

struct MasterSolution {
  MasterStatus status = MasterStatus::Optimal;
  std::vector<double> c_tilde;
  double objective = 0.0;  // ||c_tilde - c0||_1, recomputed from c_tilde
  std::vector<double> y;   // duality multipliers, when enabled
};

MasterSolution solve_master(std::span<const double> c0,
                            std::span<const double> x_hat, const CutPool& pool,
                            const ForwardProblem& problem,
                            const MasterConfig& cfg = {});

// One data point of the multi-point model: its observed solution, its own
// region and the points collected against it.
struct PointData {
  std::vector<double> x_hat;
  const ForwardProblem* problem = nullptr;
  const CutPool* pool = nullptr;
};

struct MultiMasterSolution {
  MasterStatus status = MasterStatus::Optimal;
  std::vector<double> c;
  // Per-point cost vectors. Without lambda every entry equals c.
  std::vector<std::vector<double>> c_bar;
  // ||c - c0||_1 + lambda * sum_d ||c_bar_d - c||_1
  double objective = 0.0;
};

// Without lambda a single c must satisfy every pool. With lambda each point
// gets its own c_bar_d, tied to c by the weighted 1-norm penalty.
MultiMasterSolution solve_master_multi(std::span<const double> c0,
                                       std::span<const PointData> data,
                                       std::optional<double> lambda,
                                       const MasterConfig& cfg = {});

}  // namespace invmilo
