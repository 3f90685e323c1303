// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cutgen.hpp"
#include "master.hpp"
#include "model.hpp"

namespace invmilo {

struct VariantConfig {
  std::string name;
  SubroutineParams params;
  MasterConfig master;
};

// CP, CP-ES, CPTR, CPTR-ES or CPTR-ES-DR. Throws Error(InvalidArgument) on
// anything else.
VariantConfig preset(std::string_view name);

const std::vector<std::string>& preset_names();

struct SolveLimits {
  std::optional<double> time_limit;  // seconds, whole solve
  std::size_t max_iters = 10000;     // subroutine calls
  // When false every recorded duration is 0, making reports reproducible
  // byte for byte.
  bool record_timings = true;
};

enum class SolveStatus { Optimal, TimeLimit, IterationLimit, ProvedInfeasible };

const char* to_string(SolveStatus status);

// One subroutine call. Verification passes have origin "verified" and no
// point.
struct IterationRecord {
  std::size_t iteration = 0;
  std::string origin;
  double region_size = kInf;
  double violation = 0.0;
  double master_objective = 0.0;  // after adding this point
  double cutgen_s = 0.0;
  double master_s = 0.0;
  std::vector<double> point;
  std::vector<double> c_tilde;  // candidate the subroutine was called with
};

struct SolveReport {
  SolveStatus status = SolveStatus::Optimal;
  std::vector<double> c_star;
  double objective = 0.0;
  std::size_t iterations = 0;
  std::size_t cuts = 0;
  std::vector<IterationRecord> log;
  CutPool pool;
  double total_s = 0.0;
  double cutgen_s = 0.0;
  double master_s = 0.0;
};

// Throws Error(InvalidArgument) when x_hat is not forward-feasible.
SolveReport solve_inverse(const InverseInstance& inst, const VariantConfig& variant,
                          const SolveLimits& limits = {});

// CSV with header
// iteration,origin,tr_size,violation,master_objective,cutgen_s,master_s,point
// where point is ';'-separated.
std::string log_csv(const SolveReport& report);

struct MultiOptions {
  std::optional<double> lambda;  // none: one shared cost vector
  std::size_t v_star = 1;        // violated points collected per master call
};

struct MultiReport {
  SolveStatus status = SolveStatus::Optimal;
  std::vector<double> c_star;
  std::vector<std::vector<double>> c_bar;
  double objective = 0.0;
  std::size_t iterations = 0;  // subroutine calls over all points
  std::size_t cuts = 0;
  std::size_t master_solves = 0;
  std::vector<CutPool> pools;
  double total_s = 0.0;
};

// All instances must share n; the reference cost c0 is taken from the
// first instance.
MultiReport solve_inverse_multi(std::span<const InverseInstance> instances,
                                const MultiOptions& options,
                                const VariantConfig& variant,
                                const SolveLimits& limits = {});

}  // namespace invmilo
