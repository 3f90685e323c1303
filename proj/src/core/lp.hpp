// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#pragma once

#include <cstddef>
#include <vector>

#include "model.hpp"

namespace invmilo {

// lower <= coeffs . x <= upper. A >= row has upper = +inf, an equality has
// lower == upper.
struct LpRow {
  std::vector<SparseEntry> coeffs;
  double lower = -kInf;
  double upper = kInf;
};

// minimize objective . x  subject to rows, lower <= x <= upper.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LpRow> rows;
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t num_vars() const { return objective.size(); }

  // Appends a variable with the given cost and bounds, returns its index.
  std::size_t add_var(double cost, double lo, double hi);
  void add_ge_row(std::vector<SparseEntry> coeffs, double rhs);
  void add_eq_row(std::vector<SparseEntry> coeffs, double rhs);
};

LinearProgram lp_from_ge_rows(std::vector<double> objective,
                              std::span<const GeRow> rows,
                              std::vector<double> lower,
                              std::vector<double> upper);

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  // Optimal: the solution. Unbounded: the feasible point from which the ray
  // emanates.
  std::vector<double> x;
  double objective = 0.0;
  // Optimal only. duals[i] >= 0 when row i is active at its lower side,
  // <= 0 at its upper side; reduced_costs[j] = c_j - duals . A_j.
  std::vector<double> duals;
  std::vector<double> reduced_costs;
  // Unbounded only: rows . ray stays within the row directions allowed,
  // objective . ray < 0.
  std::vector<double> ray;
  std::size_t iterations = 0;
};

struct LpOptions {
  double primal_tol = 1e-9;
  double dual_tol = 1e-9;
  double pivot_tol = 1e-9;
  // Phase-one residual above which the LP is declared infeasible.
  double infeasibility_tol = 1e-7;
  std::size_t refactor_period = 50;
  // 0 selects the default cap, max(20000, 200 (m + n)).
  std::size_t iteration_cap = 0;
};

// Bounded-variable primal simplex on a dense explicit basis inverse.
//
// Pricing is Dantzig (largest |reduced cost|, ties to the lowest column);
// after 10 (m + n) consecutive iterations without objective progress the
// phase switches permanently to Bland's rule. Ratio-test ties go to the
// lowest basis row. Throws Error(NumericalFailure) past the iteration cap.
LpOutcome solve_lp(const LinearProgram& lp, const LpOptions& options = {});

}  // namespace invmilo
