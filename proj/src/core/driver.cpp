// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#include "driver.hpp"

#include <chrono>

#include "error.hpp"
#include "numfmt.hpp"
#include "rng.hpp"

namespace invmilo {

VariantConfig preset(std::string_view name) {
  VariantConfig v;
  v.name = std::string(name);
  auto& p = v.params;
  p.p0 = 1.0;
  p.delta = 2.0;
  if (name == "CP" || name == "CP-ES") {
    p.i_star = 1;
    p.k_star = 1;
  } else if (name == "CPTR" || name == "CPTR-ES" || name == "CPTR-ES-DR") {
    p.i_star = 10;
    p.k_star = 2;
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown variant '" + v.name + "'");
  }
  if (name.find("-ES") != std::string_view::npos) p.tau = 5.0;
  if (name == "CPTR-ES-DR") p.dr = DimReduction{};
  return v;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"CP", "CP-ES", "CPTR", "CPTR-ES",
                                                 "CPTR-ES-DR"};
  return names;
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::TimeLimit: return "TimeLimit";
    case SolveStatus::IterationLimit: return "IterationLimit";
    case SolveStatus::ProvedInfeasible: return "ProvedInfeasible";
  }
  return "Unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void require_feasible(const InverseInstance& inst) {
  const auto report = validate_instance(inst);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(ErrorCode::InvalidArgument,
                "instance '" + inst.label + "': x_hat is not forward-feasible (" + v.name +
                    ", residual " + format_double(v.residual) + ")");
  }
}

void add_to_pool(CutPool& pool, Cut cut) {
  for (const auto& c : pool) {
    if (c.point == cut.point) {
      throw Error(ErrorCode::InternalConsistency,
                  "cut generation returned a point already in the pool");
    }
  }
  pool.push_back(std::move(cut));
}

}  // namespace

SolveReport solve_inverse(const InverseInstance& inst, const VariantConfig& variant,
                          const SolveLimits& limits) {
  variant.params.validate();
  require_feasible(inst);
  const auto t0 = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (limits.time_limit) {
    deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(std::max(0.0, *limits.time_limit)));
  }
  const bool timed = limits.record_timings;
  Rng rng(variant.params.seed);
  SolveReport rep;

  auto run_master = [&]() {
    const auto tm = Clock::now();
    MasterSolution ms = solve_master(inst.c0, inst.x_hat, rep.pool, inst.problem,
                                     variant.master);
    const double dt = timed ? seconds_since(tm) : 0.0;
    rep.master_s += dt;
    return std::pair{std::move(ms), dt};
  };

  auto [ms, master_dt] = run_master();
  InfoSet info = initial_info(inst.x_hat, variant.params);
  rep.status = SolveStatus::Optimal;
  for (;;) {
    if (ms.status == MasterStatus::Infeasible) {
      rep.status = SolveStatus::ProvedInfeasible;
      break;
    }
    rep.c_star = ms.c_tilde;
    rep.objective = ms.objective;
    if (deadline && Clock::now() >= *deadline) {
      rep.status = SolveStatus::TimeLimit;
      break;
    }
    if (rep.iterations >= limits.max_iters) {
      rep.status = SolveStatus::IterationLimit;
      break;
    }
    const auto tc = Clock::now();
    CutResult r = generate_cut(ms.c_tilde, inst.x_hat, inst.problem, info, variant.params,
                               rng, deadline);
    const double cut_dt = timed ? seconds_since(tc) : 0.0;
    rep.cutgen_s += cut_dt;
    if (r.kind == CutResult::Kind::TimeLimit) {
      rep.status = SolveStatus::TimeLimit;
      break;
    }
    ++rep.iterations;
    IterationRecord rec;
    rec.iteration = rep.iterations;
    rec.cutgen_s = cut_dt;
    rec.c_tilde = ms.c_tilde;
    info = r.info;
    if (r.kind == CutResult::Kind::Verified) {
      rec.origin = "verified";
      rec.master_objective = ms.objective;
      rep.log.push_back(std::move(rec));
      break;
    }
    rec.origin = to_string(r.cut.origin);
    rec.region_size = r.region_size;
    rec.violation = r.cut.violation_at_creation;
    rec.point = r.cut.point;
    add_to_pool(rep.pool, std::move(r.cut));
    std::tie(ms, master_dt) = run_master();
    rec.master_objective = ms.objective;
    rec.master_s = master_dt;
    rep.log.push_back(std::move(rec));
  }
  rep.cuts = rep.pool.size();
  rep.total_s = timed ? seconds_since(t0) : 0.0;
  return rep;
}

std::string log_csv(const SolveReport& report) {
  std::string out =
      "iteration,origin,tr_size,violation,master_objective,cutgen_s,master_s,point\n";
  for (const auto& r : report.log) {
    out += std::to_string(r.iteration);
    out += ',' + r.origin;
    out += ',' + format_double(r.region_size);
    out += ',' + format_double(r.violation);
    out += ',' + format_double(r.master_objective);
    out += ',' + format_double(r.cutgen_s);
    out += ',' + format_double(r.master_s);
    out += ',' + format_point(r.point);
    out += '\n';
  }
  return out;
}

MultiReport solve_inverse_multi(std::span<const InverseInstance> instances,
                                const MultiOptions& options,
                                const VariantConfig& variant,
                                const SolveLimits& limits) {
  variant.params.validate();
  const std::size_t D = instances.size();
  if (D == 0) throw Error(ErrorCode::InvalidArgument, "multi-point solve needs at least one instance");
  if (options.v_star < 1 || options.v_star > D) {
    throw Error(ErrorCode::InvalidArgument, "v_star must lie in [1, D]");
  }
  const std::size_t n = instances.front().problem.n;
  for (const auto& inst : instances) {
    if (inst.problem.n != n) {
      throw Error(ErrorCode::DimensionMismatch, "multi-point instances must share n");
    }
    require_feasible(inst);
  }
  const auto& c0 = instances.front().c0;
  const auto t0 = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (limits.time_limit) {
    deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(std::max(0.0, *limits.time_limit)));
  }
  Rng rng(variant.params.seed);
  MultiReport rep;
  rep.pools.resize(D);
  std::vector<InfoSet> infos;
  std::vector<PointData> data;
  for (std::size_t d = 0; d < D; ++d) {
    infos.push_back(initial_info(instances[d].x_hat, variant.params));
    data.push_back({instances[d].x_hat, &instances[d].problem, &rep.pools[d]});
  }

  std::size_t count_e = 0;
  while (count_e < D) {
    count_e = 0;
    std::size_t count_v = 0;
    const MultiMasterSolution ms = solve_master_multi(c0, data, options.lambda, variant.master);
    ++rep.master_solves;
    if (ms.status == MasterStatus::Infeasible) {
      rep.status = SolveStatus::ProvedInfeasible;
      break;
    }
    rep.c_star = ms.c;
    rep.c_bar = ms.c_bar;
    rep.objective = ms.objective;
    // One sweep over the points, cut short once v_star violated points are
    // in hand.
    for (std::size_t d = 0; d < D && count_v < options.v_star; ++d) {
      if (deadline && Clock::now() >= *deadline) {
        rep.status = SolveStatus::TimeLimit;
        break;
      }
      if (rep.iterations >= limits.max_iters) {
        rep.status = SolveStatus::IterationLimit;
        break;
      }
      CutResult r = generate_cut(ms.c_bar[d], instances[d].x_hat, instances[d].problem,
                                 infos[d], variant.params, rng, deadline);
      if (r.kind == CutResult::Kind::TimeLimit) {
        rep.status = SolveStatus::TimeLimit;
        break;
      }
      ++rep.iterations;
      infos[d] = r.info;
      if (r.kind == CutResult::Kind::Verified) {
        ++count_e;
      } else {
        ++count_v;
        add_to_pool(rep.pools[d], std::move(r.cut));
      }
    }
    if (rep.status != SolveStatus::Optimal) break;
  }
  for (const auto& p : rep.pools) rep.cuts += p.size();
  rep.total_s = limits.record_timings ? seconds_since(t0) : 0.0;
  return rep;
}

}  // namespace invmilo
