// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#include "master.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "lp.hpp"

namespace invmilo {

namespace {

// A cost vector written as c_j = base_j + sum of (column, coefficient) terms
// over master LP columns.
struct CostBlock {
  std::vector<double> base;
  std::vector<std::vector<SparseEntry>> terms;

  std::vector<double> evaluate(std::span<const double> x) const {
    std::vector<double> c = base;
    for (std::size_t j = 0; j < c.size(); ++j) {
      for (const auto& t : terms[j]) c[j] += t.value * x[t.index];
    }
    return c;
  }
};

// Appends u, v >= 0 with the given cost and returns c = base + u - v.
CostBlock add_split(LinearProgram& lp, std::span<const double> base, double weight) {
  const std::size_t n = base.size();
  CostBlock b;
  b.base.assign(base.begin(), base.end());
  b.terms.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t u = lp.add_var(weight, 0.0, kInf);
    const std::size_t v = lp.add_var(weight, 0.0, kInf);
    b.terms[j] = {{u, 1.0}, {v, -1.0}};
  }
  return b;
}

// Adds c . (x_hat - x) <= 0 for each pool point, scaled by 1/||x_hat - x||_inf.
void add_cuts(LinearProgram& lp, const CostBlock& c, std::span<const double> x_hat,
              const CutPool& pool) {
  const std::size_t n = x_hat.size();
  for (const auto& cut : pool) {
    if (cut.point.size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "master: pool point has wrong length");
    }
    std::vector<double> g(n);
    double scale = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      g[j] = x_hat[j] - cut.point[j];
      scale = std::max(scale, std::abs(g[j]));
    }
    if (scale == 0.0) continue;
    // -(terms . g) >= base . g
    std::vector<SparseEntry> coeffs;
    double rhs = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double gj = g[j] / scale;
      if (gj == 0.0) continue;
      rhs += c.base[j] * gj;
      for (const auto& t : c.terms[j]) coeffs.push_back({t.index, -t.value * gj});
    }
    lp.add_ge_row(std::move(coeffs), rhs);
  }
}

// Adds y >= 0 and y^T A = c over the >= form of the problem (bounds folded
// in). Returns the index of the first y column.
std::size_t add_duality(LinearProgram& lp, const CostBlock& c,
                        const ForwardProblem& problem) {
  const auto rows = normalized_rows_with_bounds(problem);
  const std::size_t first = lp.num_vars();
  for (std::size_t i = 0; i < rows.size(); ++i) lp.add_var(0.0, 0.0, kInf);
  std::vector<std::vector<SparseEntry>> cols(problem.n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& e : rows[i].coeffs) cols[e.index].push_back({first + i, e.value});
  }
  for (std::size_t j = 0; j < problem.n; ++j) {
    // y . A_j - terms_j = base_j
    std::vector<SparseEntry> coeffs = std::move(cols[j]);
    for (const auto& t : c.terms[j]) coeffs.push_back({t.index, -t.value});
    lp.add_eq_row(std::move(coeffs), c.base[j]);
  }
  return first;
}

void add_cost_constraints(LinearProgram& lp, const CostBlock& c,
                          const std::vector<CostConstraint>& extra) {
  for (const auto& k : extra) {
    std::vector<SparseEntry> coeffs;
    double shift = 0.0;
    for (const auto& e : k.coeffs) {
      if (e.index >= c.base.size()) {
        throw Error(ErrorCode::DimensionMismatch, "master: cost constraint index out of range");
      }
      shift += e.value * c.base[e.index];
      for (const auto& t : c.terms[e.index]) coeffs.push_back({t.index, e.value * t.value});
    }
    LpRow row;
    row.coeffs = std::move(coeffs);
    const double rhs = k.rhs - shift;
    switch (k.relation) {
      case Relation::GreaterEqual: row.lower = rhs; break;
      case Relation::LessEqual: row.upper = rhs; break;
      case Relation::Equal: row.lower = row.upper = rhs; break;
    }
    lp.rows.push_back(std::move(row));
  }
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += std::abs(a[j] - b[j]);
  return s;
}

LpOutcome solve_master_lp(const LinearProgram& lp) {
  LpOutcome out = solve_lp(lp);
  if (out.status == LpStatus::Unbounded) {
    throw Error(ErrorCode::InternalConsistency, "master LP reported unbounded");
  }
  return out;
}

}  // namespace

MasterSolution solve_master(std::span<const double> c0,
                            std::span<const double> x_hat, const CutPool& pool,
                            const ForwardProblem& problem,
                            const MasterConfig& cfg) {
  if (x_hat.size() != c0.size() || problem.n != c0.size()) {
    throw Error(ErrorCode::DimensionMismatch, "master: c0, x_hat and problem disagree on n");
  }
  LinearProgram lp;
  const CostBlock c = add_split(lp, c0, 1.0);
  add_cuts(lp, c, x_hat, pool);
  add_cost_constraints(lp, c, cfg.extra_c_constraints);
  std::size_t y_first = 0;
  if (cfg.use_duality_constraints) y_first = add_duality(lp, c, problem);

  const LpOutcome out = solve_master_lp(lp);
  MasterSolution sol;
  if (out.status == LpStatus::Infeasible) {
    sol.status = MasterStatus::Infeasible;
    return sol;
  }
  sol.c_tilde = c.evaluate(out.x);
  sol.objective = l1_distance(sol.c_tilde, c0);
  if (cfg.use_duality_constraints) {
    sol.y.assign(out.x.begin() + static_cast<std::ptrdiff_t>(y_first), out.x.end());
  }
  return sol;
}

MultiMasterSolution solve_master_multi(std::span<const double> c0,
                                       std::span<const PointData> data,
                                       std::optional<double> lambda,
                                       const MasterConfig& cfg) {
  const std::size_t n = c0.size();
  for (const auto& d : data) {
    if (d.x_hat.size() != n || !d.problem || d.problem->n != n || !d.pool) {
      throw Error(ErrorCode::DimensionMismatch, "multi-point master: inconsistent data point");
    }
  }
  if (lambda && !(*lambda >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "multi-point master: lambda must be nonnegative");
  }
  LinearProgram lp;
  const CostBlock c = add_split(lp, c0, 1.0);
  add_cost_constraints(lp, c, cfg.extra_c_constraints);
  std::vector<CostBlock> per_point;
  per_point.reserve(data.size());
  for (const auto& d : data) {
    CostBlock cd = c;
    if (lambda) {
      const CostBlock dev = add_split(lp, std::vector<double>(n, 0.0), *lambda);
      for (std::size_t j = 0; j < n; ++j) {
        cd.terms[j].insert(cd.terms[j].end(), dev.terms[j].begin(), dev.terms[j].end());
      }
    }
    add_cuts(lp, cd, d.x_hat, *d.pool);
    if (cfg.use_duality_constraints) add_duality(lp, cd, *d.problem);
    per_point.push_back(std::move(cd));
  }

  const LpOutcome out = solve_master_lp(lp);
  MultiMasterSolution sol;
  if (out.status == LpStatus::Infeasible) {
    sol.status = MasterStatus::Infeasible;
    return sol;
  }
  sol.c = c.evaluate(out.x);
  sol.objective = l1_distance(sol.c, c0);
  for (const auto& cd : per_point) {
    sol.c_bar.push_back(cd.evaluate(out.x));
    if (lambda) sol.objective += *lambda * l1_distance(sol.c_bar.back(), sol.c);
  }
  return sol;
}

}  // namespace invmilo
