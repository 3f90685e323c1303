// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#include "model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "error.hpp"

namespace invmilo {

double Row::activity(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& e : coeffs) sum += e.value * x[e.index];
  return sum;
}

void ForwardProblem::check_well_formed() const {
  if (lower.size() != n || upper.size() != n || is_integer.size() != n) {
    throw Error(ErrorCode::InvalidArgument,
                "problem '" + name + "': bound/integrality vectors must have length n");
  }
  if (!var_names.empty() && var_names.size() != n) {
    throw Error(ErrorCode::InvalidArgument,
                "problem '" + name + "': var_names must be empty or length n");
  }
  if (!objective.empty() && objective.size() != n) {
    throw Error(ErrorCode::InvalidArgument,
                "problem '" + name + "': objective must be empty or length n");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isnan(lower[j]) || std::isnan(upper[j]) || lower[j] > upper[j]) {
      throw Error(ErrorCode::InvalidArgument,
                  "problem '" + name + "': lower > upper for variable " + var_name(j));
    }
  }
  for (const auto& row : rows) {
    for (const auto& e : row.coeffs) {
      if (e.index >= n) {
        throw Error(ErrorCode::InvalidArgument,
                    "problem '" + name + "': row '" + row.name + "' references index out of range");
      }
    }
  }
}

std::size_t ForwardProblem::continuous_count() const {
  return static_cast<std::size_t>(
      std::count(is_integer.begin(), is_integer.end(), false));
}

std::string ForwardProblem::var_name(std::size_t j) const {
  if (j < var_names.size()) return var_names[j];
  return "x" + std::to_string(j);
}

ForwardProblem make_problem(std::string name, std::size_t n) {
  ForwardProblem p;
  p.name = std::move(name);
  p.n = n;
  p.lower.assign(n, 0.0);
  p.upper.assign(n, kInf);
  p.is_integer.assign(n, false);
  return p;
}

namespace {

std::vector<SparseEntry> negated(const std::vector<SparseEntry>& coeffs) {
  std::vector<SparseEntry> out = coeffs;
  for (auto& e : out) e.value = -e.value;
  return out;
}

}  // namespace

std::vector<GeRow> normalized_rows(const ForwardProblem& problem) {
  std::vector<GeRow> out;
  out.reserve(problem.rows.size());
  for (const auto& row : problem.rows) {
    switch (row.relation) {
      case Relation::GreaterEqual:
        out.push_back({row.coeffs, row.rhs});
        break;
      case Relation::LessEqual:
        out.push_back({negated(row.coeffs), -row.rhs});
        break;
      case Relation::Equal:
        out.push_back({row.coeffs, row.rhs});
        out.push_back({negated(row.coeffs), -row.rhs});
        break;
    }
  }
  return out;
}

std::vector<GeRow> normalized_rows_with_bounds(const ForwardProblem& problem) {
  auto out = normalized_rows(problem);
  for (std::size_t j = 0; j < problem.n; ++j) {
    if (std::isfinite(problem.lower[j])) {
      out.push_back({{{j, 1.0}}, problem.lower[j]});
    }
    if (std::isfinite(problem.upper[j])) {
      out.push_back({{{j, -1.0}}, -problem.upper[j]});
    }
  }
  return out;
}

bool satisfies_ge_rows(std::span<const GeRow> rows, std::span<const double> x,
                       double tol) {
  for (const auto& row : rows) {
    double act = 0.0;
    for (const auto& e : row.coeffs) act += e.value * x[e.index];
    if (act < row.rhs - tol) return false;
  }
  return true;
}

namespace {

void collect_violations(const ForwardProblem& problem,
                        std::span<const double> x, const Tolerances& tol,
                        std::vector<Violation>& out) {
  for (std::size_t r = 0; r < problem.rows.size(); ++r) {
    const Row& row = problem.rows[r];
    const double act = row.activity(x);
    double residual = 0.0;
    switch (row.relation) {
      case Relation::GreaterEqual: residual = row.rhs - act; break;
      case Relation::LessEqual: residual = act - row.rhs; break;
      case Relation::Equal: residual = std::abs(act - row.rhs); break;
    }
    if (residual > tol.feasibility) {
      out.push_back({Violation::Kind::Row, r, row.name, residual});
    }
  }
  for (std::size_t j = 0; j < problem.n; ++j) {
    if (x[j] < problem.lower[j] - tol.feasibility) {
      out.push_back({Violation::Kind::LowerBound, j, problem.var_name(j),
                     problem.lower[j] - x[j]});
    }
    if (x[j] > problem.upper[j] + tol.feasibility) {
      out.push_back({Violation::Kind::UpperBound, j, problem.var_name(j),
                     x[j] - problem.upper[j]});
    }
    if (problem.is_integer[j]) {
      const double frac = std::abs(x[j] - std::round(x[j]));
      if (frac > tol.integrality) {
        out.push_back(
            {Violation::Kind::Integrality, j, problem.var_name(j), frac});
      }
    }
  }
}

}  // namespace

bool is_forward_feasible(const ForwardProblem& problem,
                         std::span<const double> x, const Tolerances& tol) {
  if (x.size() != problem.n) return false;
  std::vector<Violation> v;
  collect_violations(problem, x, tol, v);
  return v.empty();
}

ValidationReport validate_instance(const InverseInstance& inst,
                                   const Tolerances& tol) {
  const std::size_t n = inst.problem.n;
  if (inst.c0.size() != n || inst.x_hat.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "instance '" + inst.label + "': c0 has length " +
                    std::to_string(inst.c0.size()) + ", x_hat has length " +
                    std::to_string(inst.x_hat.size()) + ", problem has n = " +
                    std::to_string(n));
  }
  inst.problem.check_well_formed();
  ValidationReport report;
  collect_violations(inst.problem, inst.x_hat, tol, report.violations);
  return report;
}

TrustRegion TrustRegion::removed(std::span<const double> center) {
  TrustRegion t = full(center, kInf);
  return t;
}

TrustRegion TrustRegion::full(std::span<const double> center, double p) {
  TrustRegion t;
  t.center.assign(center.begin(), center.end());
  t.size_p = p;
  t.active_dims.resize(center.size());
  std::iota(t.active_dims.begin(), t.active_dims.end(), std::size_t{0});
  return t;
}

const char* to_string(CutOrigin origin) {
  switch (origin) {
    case CutOrigin::TrustRegion: return "trust_region";
    case CutOrigin::FullRegion: return "full_region";
    case CutOrigin::EarlyStop: return "early_stop";
    case CutOrigin::UnboundedEscape: return "unbounded_escape";
  }
  return "unknown";
}

}  // namespace invmilo
