// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

// Command-line front end. Talks to the solver only through the C API.

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "invmilo/invmilo.h"

namespace {

constexpr int kOk = 0;
constexpr int kUserError = 1;
constexpr int kInternalError = 2;

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

int fail(invmilo_status st) {
  std::cerr << "error: " << invmilo_status_name(st) << ": " << invmilo_last_error() << "\n";
  return invmilo_status_is_user_error(st) ? kUserError : kInternalError;
}

struct SolveArgs {
  std::string instance, variant = "CPTR-ES", log;
  double time_limit = -1.0;
  std::uint64_t seed = 0;
  bool no_timings = false, duality = false;
};

int run_solve(const SolveArgs& a) {
  invmilo_instance* inst = nullptr;
  if (auto st = invmilo_instance_read(a.instance.c_str(), &inst); st != INVMILO_OK) return fail(st);
  invmilo_options opts;
  invmilo_options_init(&opts);
  opts.time_limit = a.time_limit;
  opts.seed = a.seed;
  opts.record_timings = a.no_timings ? 0 : 1;
  opts.use_duality = a.duality ? 1 : 0;
  invmilo_report* rep = nullptr;
  const auto st = invmilo_solve(inst, a.variant.c_str(), &opts, &rep);
  invmilo_instance_free(inst);
  if (st != INVMILO_OK) return fail(st);
  std::string c;
  for (std::size_t j = 0; j < invmilo_report_dim(rep); ++j) {
    c += (j ? ", " : "") + num(invmilo_report_cost(rep)[j]);
  }
  std::cout << "status: " << invmilo_report_status(rep) << "\n"
            << "objective: " << num(invmilo_report_objective(rep)) << "\n"
            << "c*: (" << c << ")\n"
            << "iterations: " << invmilo_report_iterations(rep) << "\n"
            << "cuts: " << invmilo_report_cuts(rep) << "\n";
  int code = kOk;
  if (!a.log.empty()) {
    std::ofstream out(a.log, std::ios::binary | std::ios::trunc);
    out << invmilo_report_log_csv(rep);
    if (!out) {
      std::cerr << "error: cannot write " << a.log << "\n";
      code = kUserError;
    }
  }
  invmilo_report_free(rep);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse mixed-integer optimization by trust-region cutting planes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(invmilo_version()));

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve one inverse instance");
  s->add_option("--instance", solve.instance, "Instance JSON file")->required();
  s->add_option("--variant", solve.variant, "CP, CP-ES, CPTR, CPTR-ES or CPTR-ES-DR");
  s->add_option("--time-limit", solve.time_limit, "Seconds; negative for none");
  s->add_option("--seed", solve.seed, "Seed for the dimensionality-reduction stream");
  s->add_option("--log", solve.log, "Write the per-iteration log CSV here");
  s->add_flag("--no-timings", solve.no_timings, "Report all durations as 0");
  s->add_flag("--duality", solve.duality, "Add duality constraints to the master problem");

  std::string mps, gen_out;
  std::uint64_t gen_seed = 0;
  double gen_limit = -1.0;
  auto* g = app.add_subcommand("gen", "Generate inverse instances from an MPS file");
  g->add_option("--mps", mps, "Forward problem in MPS format")->required();
  g->add_option("--seed", gen_seed, "Seed for the random cost vectors");
  g->add_option("--time-limit", gen_limit, "Seconds per forward solve; negative for none");
  g->add_option("--out", gen_out, "Output directory")->required();

  std::string bench_dir, variants = "CP,CP-ES,CPTR,CPTR-ES,CPTR-ES-DR", bench_out;
  double bench_limit = -1.0;
  bool bench_no_timings = false;
  auto* b = app.add_subcommand("bench", "Solve every instance in a directory under each variant");
  b->add_option("--dir", bench_dir, "Directory of instance JSON files")->required();
  b->add_option("--variants", variants, "Comma-separated variant names");
  b->add_option("--time-limit", bench_limit, "Seconds per solve; negative for none");
  b->add_option("--out", bench_out, "Results CSV")->required();
  b->add_flag("--no-timings", bench_no_timings, "Report all durations as 0");

  std::string results, profile_out;
  auto* p = app.add_subcommand("profile", "Performance profiles from a results CSV");
  p->add_option("--results", results, "Results CSV from bench")->required();
  p->add_option("--out", profile_out, "Profile CSV")->required();

  std::string v_instance, mode, points;
  auto* v = app.add_subcommand("verify", "Check generator sets or inverse feasibility by enumeration");
  v->add_option("--instance", v_instance, "Instance JSON file")->required();
  v->add_option("--mode", mode, "generator or inverse-feasible")
      ->required()
      ->check(CLI::IsMember({"generator", "inverse-feasible"}));
  v->add_option("--points", points, "One vector per line")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    std::cerr << (subs.empty() ? app.help() : subs.front()->help());
    return kUserError;
  }

  try {
    if (s->parsed()) return run_solve(solve);
    if (g->parsed()) {
      std::size_t written = 0;
      int dropped = 0;
      const auto st =
          invmilo_generate(mps.c_str(), gen_seed, gen_limit, gen_out.c_str(), &written, &dropped);
      if (st != INVMILO_OK) return fail(st);
      if (dropped) {
        std::cout << "dropped: too few feasible draws\n";
      } else {
        std::cout << "wrote " << written << " instance(s) to " << gen_out << "\n";
      }
      return kOk;
    }
    if (b->parsed()) {
      std::size_t rows = 0;
      const auto st = invmilo_bench(bench_dir.c_str(), variants.c_str(), bench_limit,
                                    bench_no_timings ? 0 : 1, bench_out.c_str(), &rows);
      if (st != INVMILO_OK) return fail(st);
      std::cout << "wrote " << rows << " row(s) to " << bench_out << "\n";
      return kOk;
    }
    if (p->parsed()) {
      std::size_t n = 0;
      const auto st = invmilo_profile(results.c_str(), profile_out.c_str(), &n);
      if (st != INVMILO_OK) return fail(st);
      std::cout << "wrote " << n << " point(s) to " << profile_out << "\n";
      return kOk;
    }
    if (v->parsed()) {
      int verdict = 0;
      char* report = nullptr;
      const auto m = mode == "generator" ? INVMILO_VERIFY_GENERATOR : INVMILO_VERIFY_INVERSE_FEASIBLE;
      const auto st = invmilo_verify(v_instance.c_str(), m, points.c_str(), &verdict, &report);
      if (st != INVMILO_OK) return fail(st);
      std::cout << report;
      invmilo_string_free(report);
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}
