// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

// Small hand-made inverse instances shared by the test binaries.

#pragma once

#include <vector>

#include "model.hpp"

namespace invmilo::fixtures {

// Two binaries, b1 + 0.6 b2 <= 1; x_hat = (0,1) is optimal for c0.
inline InverseInstance ec() {
  InverseInstance inst;
  inst.problem = make_problem("ec", 2);
  inst.problem.var_names = {"b1", "b2"};
  inst.problem.upper = {1.0, 1.0};
  inst.problem.is_integer = {true, true};
  inst.problem.rows.push_back({"cap", {{0, 1.0}, {1, 0.6}}, Relation::LessEqual, 1.0});
  inst.problem.objective = {-1.0, -1.0};
  inst.c0 = {-1.0, -1.0};
  inst.x_hat = {0.0, 1.0};
  inst.label = "ec";
  return inst;
}

// X = {x in Z^2 : x1 + x2 >= 2, 0 <= x <= 3}, c0 = (1,2), x_hat = (1,1).
inline InverseInstance knapsack() {
  InverseInstance inst;
  inst.problem = make_problem("knapsack", 2);
  inst.problem.upper = {3.0, 3.0};
  inst.problem.is_integer = {true, true};
  inst.problem.rows.push_back({"cover", {{0, 1.0}, {1, 1.0}}, Relation::GreaterEqual, 2.0});
  inst.problem.objective = {1.0, 2.0};
  inst.c0 = {1.0, 2.0};
  inst.x_hat = {1.0, 1.0};
  inst.label = "knapsack";
  return inst;
}

// Two-dimensional polygon with x_hat = (3,9) on its top edge. Near x_hat
// the lattice points (3,8) and (4,9) together with the extreme point (2,8)
// generate the same inverse-feasible cone as all seven extreme points.
inline InverseInstance fig2a() {
  InverseInstance inst;
  auto& p = inst.problem;
  p = make_problem("fig2a", 2);
  p.var_names = {"x", "y"};
  p.lower = {2.0, 5.0};
  p.upper = {6.0, 9.0};
  p.is_integer = {true, true};
  p.rows.push_back({"left", {{0, -1.0}, {1, 1.0}}, Relation::LessEqual, 6.0});
  p.rows.push_back({"top", {{0, 1.0}, {1, 1.0}}, Relation::LessEqual, 14.0});
  p.rows.push_back({"right", {{0, 1.0}, {1, -1.0}}, Relation::LessEqual, 1.0});
  p.rows.push_back({"bottom", {{0, 1.0}, {1, 1.0}}, Relation::GreaterEqual, 8.0});
  p.objective = {-2.0, -1.0};
  inst.c0 = {-2.0, -1.0};
  inst.x_hat = {3.0, 9.0};
  inst.label = "fig2a";
  return inst;
}

// X = Z^2_+ with x_hat at the origin. FP(c0) is unbounded; the inverse
// optimum is c = (0,2) at distance 1.
inline InverseInstance unbounded() {
  InverseInstance inst;
  inst.problem = make_problem("orthant", 2);
  inst.problem.is_integer = {true, true};
  inst.c0 = {-1.0, 2.0};
  inst.x_hat = {0.0, 0.0};
  inst.label = "orthant";
  return inst;
}

// Wedge {x in Z^2_+ : x2 <= x1} at the origin. No point at distance 1
// improves on c0, yet FP(c0) is unbounded along (1,1). Optimum 0.5.
inline InverseInstance wedge() {
  InverseInstance inst;
  inst.problem = make_problem("wedge", 2);
  inst.problem.is_integer = {true, true};
  inst.problem.rows.push_back({"cone", {{0, -1.0}, {1, 1.0}}, Relation::LessEqual, 0.0});
  inst.c0 = {1.0, -1.5};
  inst.x_hat = {0.0, 0.0};
  inst.label = "wedge";
  return inst;
}

inline std::vector<InverseInstance> bounded_all() {
  return {ec(), knapsack(), fig2a()};
}

}  // namespace invmilo::fixtures
