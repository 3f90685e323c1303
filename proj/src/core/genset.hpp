// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

// Brute-force checks of generator-set statements on small enumerable
// regions. Everything here is exact up to LP tolerances and exponential in
// the dimension; it exists for verification, not for solving.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "model.hpp"

namespace invmilo {

using Point = std::vector<double>;

struct EnumeratedRegion {
  ForwardProblem problem;
  std::vector<Point> points;  // lexicographically sorted
};

// Every feasible lattice point of a bounded pure-integer problem.
// Throws UnboundedBox on an infinite bound, TooLarge when the bound box holds
// more than `limit` lattice points, InvalidArgument on continuous variables.
EnumeratedRegion enumerate_feasible(const ForwardProblem& problem,
                                    double limit = 1e6);

// Points that are not convex combinations of the others. Duplicates are
// collapsed first.
std::vector<Point> extreme_points(std::span<const Point> points);

// c . x_hat <= c . x + 1e-9 max(1, |c . x_hat|) for every point.
bool is_inverse_feasible(std::span<const double> c, std::span<const double> x_hat,
                         std::span<const Point> points);

struct GeneratorVerdict {
  bool is_generator = false;
  // On false: a cost direction that is inverse-feasible for exactly one of
  // G and the region, and the point whose ray lies outside the other cone.
  std::vector<double> witness;
  Point uncovered;
  // Forward-feasible check only: outcome of the sampled ball test and the
  // radius it settled on.
  bool sampled_check_agrees = true;
  double sample_radius = 0.0;
};

// Cone equality Y(x_hat, G) == Y(x_hat, region).
GeneratorVerdict is_generator_set(std::span<const Point> generators,
                                  std::span<const double> x_hat,
                                  const EnumeratedRegion& region);

// G must be a subset of the region (GNotSubsetOfX otherwise); then only the
// inclusion region ⊆ Y(x_hat, G) is tested. Also runs the sampled ball test
// and records whether it agrees.
GeneratorVerdict is_forward_feasible_generator_set(std::span<const Point> generators,
                                                   std::span<const double> x_hat,
                                                   const EnumeratedRegion& region);

// True when the verdict's witness is inverse-feasible for one of the two
// point sets and not the other.
bool witness_refutes(const GeneratorVerdict& verdict,
                     std::span<const Point> generators,
                     std::span<const double> x_hat,
                     const EnumeratedRegion& region);

}  // namespace invmilo
