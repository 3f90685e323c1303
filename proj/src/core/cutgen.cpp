// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#include "cutgen.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace invmilo {

void SubroutineParams::validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::InvalidArgument, "subroutine parameters: " + what);
  };
  if (!(p0 > 0.0)) fail("p0 must be positive");
  if (!(delta > 1.0)) fail("delta must exceed 1");
  if (i_star < 1) fail("i_star must be at least 1");
  if (k_star < 1) fail("k_star must be at least 1");
  if (tau && !(*tau >= 0.0)) fail("tau must be nonnegative");
  if (!(violation_tol >= 0.0)) fail("violation_tol must be nonnegative");
  if (dr) {
    if (!(dr->kappa > 0.0 && dr->kappa < 1.0)) fail("kappa must lie in (0,1)");
    if (!(dr->dr_floor_q > 0.0 && dr->dr_floor_q < 1.0)) fail("q must lie in (0,1)");
  }
}

TrustRegion remove(const TrustRegion& t, std::size_t i, std::size_t k,
                   const SubroutineParams& prm) {
  if ((i > 0 && i % prm.i_star == 0) || k == prm.k_star) {
    return TrustRegion::removed(t.center);
  }
  return t;
}

TrustRegion update(const TrustRegion& t, const SubroutineParams& prm) {
  if (t.is_infinite()) {
    throw Error(ErrorCode::InternalConsistency, "update called on a removed trust region");
  }
  return TrustRegion::full(t.center, prm.delta * t.size_p);
}

TrustRegion save(const TrustRegion& current, const TrustRegion& previous) {
  return current.is_infinite() ? previous : current;
}

std::size_t s_of_p(double p, std::size_t n, double kappa, double dr_floor_q) {
  const double nd = static_cast<double>(n);
  // The small epsilon keeps values such as 0.97 * 100 from flooring to 96.
  const double shrink = std::floor((1.0 - kappa * (p - 1.0)) * nd + 1e-9);
  const double floor_q = std::floor(dr_floor_q * nd + 1e-9);
  const double s = std::max(shrink, floor_q);
  if (s <= 0.0) return 0;
  return std::min(n, static_cast<std::size_t>(s));
}

TrustRegion s_update(const TrustRegion& t, std::size_t h,
                     const SubroutineParams& prm, Rng& rng) {
  if (!prm.dr) {
    throw Error(ErrorCode::InternalConsistency, "s_update requires dimensionality reduction");
  }
  if (t.is_infinite()) {
    throw Error(ErrorCode::InternalConsistency, "s_update called on a removed trust region");
  }
  const auto& dr = *prm.dr;
  const std::size_t n = t.center.size();
  if (h == dr.h_star) return TrustRegion::full(t.center, t.size_p);
  double p = t.size_p;
  if (h == dr.h_star + 1) {
    p *= prm.delta;
  } else if (h > dr.h_star + 1) {
    throw Error(ErrorCode::InternalConsistency, "s_update: counter past h_star + 1");
  }
  TrustRegion out;
  out.center = t.center;
  out.size_p = p;
  out.active_dims = rng.random_subset(n, s_of_p(p, n, dr.kappa, dr.dr_floor_q));
  return out;
}

ForwardProblem encode_subregion(const ForwardProblem& problem, const TrustRegion& t) {
  if (t.is_infinite()) return problem;
  const std::size_t n = problem.n;
  if (t.center.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "encode_subregion: center has wrong length");
  }
  ForwardProblem out = problem;
  std::vector<bool> active(n, false);
  for (std::size_t j : t.active_dims) active.at(j) = true;
  Row budget{"tr_budget", {}, Relation::LessEqual, t.size_p};
  for (std::size_t j = 0; j < n; ++j) {
    const double c = t.center[j];
    if (!active[j]) {
      out.lower[j] = c;
      out.upper[j] = c;
      continue;
    }
    const std::size_t d = out.n++;
    out.lower.push_back(0.0);
    out.upper.push_back(kInf);
    out.is_integer.push_back(false);
    if (!out.var_names.empty()) out.var_names.push_back("tr_dev_" + problem.var_name(j));
    if (!out.objective.empty()) out.objective.push_back(0.0);
    out.rows.push_back({"tr_above_" + std::to_string(j), {{d, 1.0}, {j, -1.0}},
                        Relation::GreaterEqual, -c});
    out.rows.push_back({"tr_below_" + std::to_string(j), {{d, 1.0}, {j, 1.0}},
                        Relation::GreaterEqual, c});
    budget.coeffs.push_back({d, 1.0});
  }
  out.rows.push_back(std::move(budget));
  return out;
}

double violation(std::span<const double> c, std::span<const double> x_hat,
                 std::span<const double> x) {
  double v = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) v += c[j] * (x_hat[j] - x[j]);
  return v;
}

double violation_threshold(std::span<const double> c, std::span<const double> x_hat,
                           double violation_tol) {
  double cx = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) cx += c[j] * x_hat[j];
  return violation_tol * std::max(1.0, std::abs(cx));
}

InfoSet initial_info(std::span<const double> x_hat, const SubroutineParams& prm) {
  InfoSet info;
  info.region = TrustRegion::full(x_hat, prm.p0);
  return info;
}

CutResult generate_cut(std::span<const double> c_tilde,
                       std::span<const double> x_hat,
                       const ForwardProblem& problem, const InfoSet& info,
                       const SubroutineParams& prm, Rng& rng,
                       std::optional<std::chrono::steady_clock::time_point> deadline,
                       const Tolerances& tol) {
  using Clock = std::chrono::steady_clock;
  const std::size_t n = problem.n;
  if (c_tilde.size() != n || x_hat.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "generate_cut: c_tilde or x_hat has wrong length");
  }
  const double threshold = violation_threshold(c_tilde, x_hat, prm.violation_tol);
  const std::vector<double> xh(x_hat.begin(), x_hat.end());
  const std::vector<double> c(c_tilde.begin(), c_tilde.end());

  CutResult result;
  result.info = info;
  TrustRegion candidate = info.region;
  std::size_t h = info.empty_counter;
  for (std::size_t k = 1;; ++k) {
    const TrustRegion region = remove(candidate, info.outer_index, k, prm);
    const ForwardProblem sub = encode_subregion(problem, region);
    std::vector<double> objective(sub.n, 0.0);
    std::copy(c.begin(), c.end(), objective.begin());

    StopPolicy policy;
    if (deadline) {
      policy.time_limit =
          std::max(0.0, std::chrono::duration<double>(*deadline - Clock::now()).count());
    }
    policy.early_stop_tau = prm.tau;
    policy.violation_oracle = [&](std::span<const double> x) {
      return violation(c, xh, x.first(n));
    };
    policy.violation_min = threshold;

    const MilpOutcome out = solve_milp(sub, objective, policy, tol);
    ++result.forward_solves;
    switch (out.status) {
      case MilpStatus::TimeLimit:
        result.kind = CutResult::Kind::TimeLimit;
        return result;
      case MilpStatus::Infeasible:
        throw Error(ErrorCode::InternalConsistency,
                    "cut generation problem infeasible although x_hat lies in the region");
      case MilpStatus::Unbounded:
        throw Error(ErrorCode::NumericalFailure,
                    "cut generation problem unbounded and no escape point was found");
      default:
        break;
    }
    std::vector<double> x(out.incumbent.begin(),
                          out.incumbent.begin() + static_cast<std::ptrdiff_t>(n));
    const double v = violation(c, xh, x);
    if (v > threshold) {
      result.kind = CutResult::Kind::Violated;
      result.cut.point = std::move(x);
      result.cut.violation_at_creation = v;
      if (out.status == MilpStatus::UnboundedViolationEscape) {
        result.cut.origin = CutOrigin::UnboundedEscape;
      } else if (out.status == MilpStatus::EarlyStopFeasible) {
        result.cut.origin = CutOrigin::EarlyStop;
      } else {
        result.cut.origin =
            region.is_infinite() ? CutOrigin::FullRegion : CutOrigin::TrustRegion;
      }
      result.region_size = region.size_p;
      result.info.region = save(region, candidate);
      result.info.outer_index = info.outer_index + 1;
      if (prm.dr && !region.is_infinite()) h = 0;
      result.info.empty_counter = h;
      return result;
    }
    if (region.is_infinite()) {
      result.kind = CutResult::Kind::Verified;
      return result;  // info unchanged
    }
    if (prm.dr) {
      ++h;
      candidate = s_update(region, h, prm, rng);
      if (h == prm.dr->h_star + 1) h = 0;
    } else {
      candidate = update(region, prm);
    }
  }
}

}  // namespace invmilo
