// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"

namespace invmilo {

struct GeneratedSet {
  std::vector<InverseInstance> instances;  // empty when dropped
  bool dropped = false;
  std::size_t attempts_used = 0;
};

// Draws cost vectors uniform on [-1, 1]^n and solves the forward problem
// under each; optimal solutions become x_hat with the problem's own
// objective as c0 (zeros when it has none). Unbounded, infeasible and
// timed-out draws count as failed attempts. Fewer than `count` successes in
// `attempts` draws drops the problem. Labels are <name>_t1, <name>_t2, ...
GeneratedSet generate_instances(const ForwardProblem& problem, std::uint64_t seed,
                                std::optional<double> time_limit,
                                std::size_t attempts = 10, std::size_t count = 3);

struct BenchRow {
  std::string instance;
  std::string variant;
  std::string status;
  double objective = 0.0;
  std::size_t iterations = 0;
  std::size_t cuts = 0;
  double total_s = 0.0;
  double cutgen_s = 0.0;
  double master_s = 0.0;
  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

inline constexpr std::string_view kResultsHeader =
    "instance,variant,status,objective,iterations,cuts,total_s,cutgen_s,master_s";

// One solve per (instance, variant), rows sorted by (instance, variant).
// A cell whose solve throws gets status "Error".
std::vector<BenchRow> run_bench(const std::vector<InverseInstance>& instances,
                                const std::vector<std::string>& variants,
                                std::optional<double> time_limit,
                                bool record_timings = true);

std::string results_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> parse_results_csv(std::string_view text);

struct ProfilePoint {
  std::string variant;
  double x = 0.0;
  double y = 0.0;
  std::string curve_kind;  // "solved" or "ratio"
  friend bool operator==(const ProfilePoint&, const ProfilePoint&) = default;
};

inline constexpr std::string_view kProfileHeader = "variant,x,y,curve_kind";

// Per variant, in name order:
//  - "solved": (0,0) followed by (t_k, k) over its sorted Optimal solve times;
//  - "ratio": for theta = 2^(k/4), k = 0..40, the fraction of instances the
//    variant solved within theta times the best time any variant needed.
std::vector<ProfilePoint> performance_profile(const std::vector<BenchRow>& rows);

std::string profile_csv(const std::vector<ProfilePoint>& points);

}  // namespace invmilo
