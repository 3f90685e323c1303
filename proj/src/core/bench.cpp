// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#include "bench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "driver.hpp"
#include "error.hpp"
#include "milp.hpp"
#include "numfmt.hpp"
#include "rng.hpp"

namespace invmilo {

GeneratedSet generate_instances(const ForwardProblem& problem, std::uint64_t seed,
                                std::optional<double> time_limit, std::size_t attempts,
                                std::size_t count) {
  problem.check_well_formed();
  Rng rng(seed);
  GeneratedSet out;
  const std::vector<double> c0 =
      problem.objective.empty() ? std::vector<double>(problem.n, 0.0) : problem.objective;
  StopPolicy policy;
  policy.time_limit = time_limit;
  while (out.instances.size() < count && out.attempts_used < attempts) {
    ++out.attempts_used;
    std::vector<double> c(problem.n);
    for (auto& v : c) v = rng.uniform_real(-1.0, 1.0);
    const auto res = solve_milp(problem, c, policy);
    if (res.status != MilpStatus::Optimal) continue;
    InverseInstance inst;
    inst.problem = problem;
    inst.c0 = c0;
    inst.x_hat = res.incumbent;
    for (std::size_t j = 0; j < problem.n; ++j) {
      if (problem.is_integer[j]) inst.x_hat[j] = std::round(inst.x_hat[j]);
    }
    inst.label = problem.name + "_t" + std::to_string(out.instances.size() + 1);
    out.instances.push_back(std::move(inst));
  }
  if (out.instances.size() < count) {
    out.instances.clear();
    out.dropped = true;
  }
  return out;
}

std::vector<BenchRow> run_bench(const std::vector<InverseInstance>& instances,
                                const std::vector<std::string>& variants,
                                std::optional<double> time_limit, bool record_timings) {
  std::vector<VariantConfig> configs;
  for (const auto& v : variants) configs.push_back(preset(v));
  SolveLimits limits;
  limits.time_limit = time_limit;
  limits.record_timings = record_timings;
  std::vector<BenchRow> rows;
  for (const auto& inst : instances) {
    for (const auto& cfg : configs) {
      BenchRow row;
      row.instance = inst.label;
      row.variant = cfg.name;
      try {
        const auto rep = solve_inverse(inst, cfg, limits);
        row.status = to_string(rep.status);
        row.objective = rep.objective;
        row.iterations = rep.iterations;
        row.cuts = rep.cuts;
        row.total_s = rep.total_s;
        row.cutgen_s = rep.cutgen_s;
        row.master_s = rep.master_s;
      } catch (const Error&) {
        row.status = "Error";
        row.objective = std::nan("");
      }
      rows.push_back(std::move(row));
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.instance, a.variant) < std::tie(b.instance, b.variant);
  });
  return rows;
}

std::string results_csv(const std::vector<BenchRow>& rows) {
  std::string out(kResultsHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += r.instance + ',' + r.variant + ',' + r.status + ',' + format_double(r.objective) + ',' +
           std::to_string(r.iterations) + ',' + std::to_string(r.cuts) + ',' +
           format_double(r.total_s) + ',' + format_double(r.cutgen_s) + ',' +
           format_double(r.master_s) + '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

double csv_number(const std::string& s, std::size_t line) {
  if (s == "nan") return std::nan("");
  const auto v = parse_double(s);
  if (!v) throw Error(ErrorCode::Parse, "results line " + std::to_string(line) + ": bad number " + s);
  return *v;
}

std::size_t csv_count(const std::string& s, std::size_t line) {
  const double v = csv_number(s, line);
  if (!(v >= 0.0) || v != std::floor(v)) {
    throw Error(ErrorCode::Parse, "results line " + std::to_string(line) + ": bad count " + s);
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

std::vector<BenchRow> parse_results_csv(std::string_view text) {
  std::vector<BenchRow> rows;
  std::size_t pos = 0, line = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view l = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line;
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    if (l.empty()) continue;
    if (!header_seen) {
      if (l != kResultsHeader) throw Error(ErrorCode::Parse, "results: unexpected header");
      header_seen = true;
      continue;
    }
    const auto f = split_csv_line(l);
    if (f.size() != 9) {
      throw Error(ErrorCode::Parse, "results line " + std::to_string(line) + ": expected 9 fields");
    }
    BenchRow r;
    r.instance = f[0];
    r.variant = f[1];
    r.status = f[2];
    r.objective = csv_number(f[3], line);
    r.iterations = csv_count(f[4], line);
    r.cuts = csv_count(f[5], line);
    r.total_s = csv_number(f[6], line);
    r.cutgen_s = csv_number(f[7], line);
    r.master_s = csv_number(f[8], line);
    rows.push_back(std::move(r));
  }
  if (!header_seen) throw Error(ErrorCode::Parse, "results: empty file");
  return rows;
}

std::vector<ProfilePoint> performance_profile(const std::vector<BenchRow>& rows) {
  if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "performance_profile: no rows");
  std::set<std::string> variants, instances;
  std::map<std::string, double> best;  // per instance, over solved cells
  for (const auto& r : rows) {
    variants.insert(r.variant);
    instances.insert(r.instance);
    if (r.status != "Optimal") continue;
    auto [it, fresh] = best.emplace(r.instance, r.total_s);
    if (!fresh) it->second = std::min(it->second, r.total_s);
  }
  const double count = static_cast<double>(instances.size());
  std::vector<ProfilePoint> out;
  for (const auto& v : variants) {
    std::vector<double> times;
    std::map<std::string, double> mine;
    for (const auto& r : rows) {
      if (r.variant != v || r.status != "Optimal") continue;
      times.push_back(r.total_s);
      mine[r.instance] = r.total_s;
    }
    std::sort(times.begin(), times.end());
    out.push_back({v, 0.0, 0.0, "solved"});
    for (std::size_t k = 0; k < times.size(); ++k) {
      out.push_back({v, times[k], static_cast<double>(k + 1), "solved"});
    }
    for (int k = 0; k <= 40; ++k) {
      const double theta = std::exp2(k / 4.0);
      std::size_t within = 0;
      for (const auto& [inst, t] : mine) {
        if (t <= theta * best.at(inst)) ++within;
      }
      out.push_back({v, theta, static_cast<double>(within) / count, "ratio"});
    }
  }
  return out;
}

std::string profile_csv(const std::vector<ProfilePoint>& points) {
  std::string out(kProfileHeader);
  out += '\n';
  for (const auto& p : points) {
    out += p.variant + ',' + format_double(p.x) + ',' + format_double(p.y) + ',' + p.curve_kind + '\n';
  }
  return out;
}

}  // namespace invmilo
