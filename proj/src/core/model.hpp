// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

// Problem and instance data model shared by every solver component.
//
// A forward problem is the mixed-integer region
//
//   X = { x : rows(x) hold, lower <= x <= upper, x_j integral for j in I }
//
// and an inverse instance pairs it with a reference cost vector c0 and an
// observed forward-feasible point x_hat. Infinite bounds are IEEE infinities,
// never large finite numbers.

#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace invmilo {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Relation { GreaterEqual, LessEqual, Equal };

struct SparseEntry {
  std::size_t index = 0;
  double value = 0.0;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

struct Row {
  std::string name;
  std::vector<SparseEntry> coeffs;
  Relation relation = Relation::GreaterEqual;
  double rhs = 0.0;

  double activity(std::span<const double> x) const;

  friend bool operator==(const Row&, const Row&) = default;
};

struct Tolerances {
  double feasibility = 1e-7;  // absolute, on row residuals and bounds
  double integrality = 1e-6;
  double mip_gap = 1e-6;  // absolute
  double violation = 1e-6;  // relative, see cutgen
};

struct ForwardProblem {
  std::string name;
  std::size_t n = 0;
  std::vector<std::string> var_names;  // empty or length n
  std::vector<Row> rows;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<bool> is_integer;
  // Cost vector the problem came with (e.g. the MPS objective). Empty when
  // the problem was given without one.
  std::vector<double> objective;

  // Throws Error(InvalidArgument) when indices, bounds or vector lengths are
  // inconsistent.
  void check_well_formed() const;

  std::size_t continuous_count() const;
  bool all_integer() const { return continuous_count() == 0; }

  std::string var_name(std::size_t j) const;

  friend bool operator==(const ForwardProblem&,
                         const ForwardProblem&) = default;
};

// Builds an n-variable problem with default bounds [0, +inf), all continuous.
ForwardProblem make_problem(std::string name, std::size_t n);

// A row of the solver-facing ">= form": coeffs . x >= rhs.
struct GeRow {
  std::vector<SparseEntry> coeffs;
  double rhs = 0.0;
};

// Rows only; an equality becomes two >= rows, a <= row is negated.
std::vector<GeRow> normalized_rows(const ForwardProblem& problem);

// normalized_rows plus one row per finite variable bound (x_j >= l_j and
// -x_j >= -u_j), i.e. the full matrix A of {x : A x >= b}.
std::vector<GeRow> normalized_rows_with_bounds(const ForwardProblem& problem);

bool satisfies_ge_rows(std::span<const GeRow> rows, std::span<const double> x,
                       double tol);

// Rows, bounds and integrality, all within tolerance.
bool is_forward_feasible(const ForwardProblem& problem,
                         std::span<const double> x, const Tolerances& tol = {});

struct InverseInstance {
  ForwardProblem problem;
  std::vector<double> c0;
  std::vector<double> x_hat;
  std::string label;

  friend bool operator==(const InverseInstance&,
                         const InverseInstance&) = default;
};

struct Violation {
  enum class Kind { Row, LowerBound, UpperBound, Integrality };
  Kind kind = Kind::Row;
  std::size_t index = 0;  // row index or variable index
  std::string name;
  double residual = 0.0;  // amount by which the requirement is missed
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Throws Error(DimensionMismatch) when c0 or x_hat do not have length n;
// infeasibility of x_hat is reported, not thrown.
ValidationReport validate_instance(const InverseInstance& inst,
                                   const Tolerances& tol = {});

// Trust region T(center, p) = { y : ||center - y||_1 <= p, y_j = center_j for
// j outside active_dims }. size_p == kInf encodes the removed region R^n.
struct TrustRegion {
  std::vector<double> center;
  double size_p = kInf;
  std::vector<std::size_t> active_dims;  // sorted ascending

  static TrustRegion removed(std::span<const double> center);
  static TrustRegion full(std::span<const double> center, double p);

  bool is_infinite() const { return size_p == kInf; }
  bool is_full_dimensional() const { return active_dims.size() == center.size(); }

  friend bool operator==(const TrustRegion&, const TrustRegion&) = default;
};

enum class CutOrigin { TrustRegion, FullRegion, EarlyStop, UnboundedEscape };

const char* to_string(CutOrigin origin);

struct Cut {
  std::vector<double> point;
  double violation_at_creation = 0.0;
  CutOrigin origin = CutOrigin::FullRegion;
};

using CutPool = std::vector<Cut>;

struct InfoSet {
  TrustRegion region;
  std::size_t outer_index = 0;
  std::size_t empty_counter = 0;  // h, used with dimensionality reduction only
};

}  // namespace invmilo
