// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

// Cut generation with trust regions.
//
// Each call searches for a point of X that beats x_hat under the candidate
// cost, first inside a 1-norm ball around x_hat and then over growing or
// removed balls, and hands back the trust-region state for the next call.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "milp.hpp"
#include "model.hpp"
#include "rng.hpp"

namespace invmilo {

struct DimReduction {
  double kappa = 0.03;       // dimensions dropped per unit of size
  double dr_floor_q = 0.8;   // never fewer than floor(q n) dimensions
  std::size_t h_star = 10;   // empty low-dimensional regions before going full
};

struct SubroutineParams {
  double p0 = 1.0;
  double delta = 2.0;
  std::size_t i_star = 10;
  std::size_t k_star = 2;
  std::optional<double> tau;  // early-stop seconds
  std::optional<DimReduction> dr;
  std::uint64_t seed = 0;
  double violation_tol = 1e-6;

  // Throws Error(InvalidArgument) on out-of-range values.
  void validate() const;
};

// Infinite region when i is a positive multiple of i_star or k == k_star.
TrustRegion remove(const TrustRegion& t, std::size_t i, std::size_t k,
                   const SubroutineParams& prm);

// Grows the size by delta over every dimension. Throws on an infinite region.
TrustRegion update(const TrustRegion& t, const SubroutineParams& prm);

// current unless it is infinite, in which case previous.
TrustRegion save(const TrustRegion& current, const TrustRegion& previous);

// max(floor((1 - kappa (p - 1)) n), floor(q n))
std::size_t s_of_p(double p, std::size_t n, double kappa, double dr_floor_q);

// Stochastic update for the dimension-reduced subroutine; h is the counter
// after its increment.
TrustRegion s_update(const TrustRegion& t, std::size_t h,
                     const SubroutineParams& prm, Rng& rng);

// Appends deviation columns so that the feasible set, projected on the
// original variables, is T intersected with X. Infinite regions pass through.
ForwardProblem encode_subregion(const ForwardProblem& problem,
                                const TrustRegion& t);

// c . (x_hat - x): how much x beats x_hat under c.
double violation(std::span<const double> c, std::span<const double> x_hat,
                 std::span<const double> x);

// Relative violation threshold violation_tol * max(1, |c . x_hat|).
double violation_threshold(std::span<const double> c, std::span<const double> x_hat,
                           double violation_tol);

struct CutResult {
  enum class Kind { Violated, Verified, TimeLimit };
  Kind kind = Kind::Verified;
  Cut cut;              // Violated only
  double region_size = kInf;  // size of the region the point came from
  InfoSet info;         // state for the next call
  std::size_t forward_solves = 0;
};

InfoSet initial_info(std::span<const double> x_hat, const SubroutineParams& prm);

// One run of the cut generation subroutine. The deadline, if given, bounds
// every forward solve; reaching it yields Kind::TimeLimit.
CutResult generate_cut(std::span<const double> c_tilde,
                       std::span<const double> x_hat,
                       const ForwardProblem& problem, const InfoSet& info,
                       const SubroutineParams& prm, Rng& rng,
                       std::optional<std::chrono::steady_clock::time_point> deadline = {},
                       const Tolerances& tol = {});

}  // namespace invmilo
