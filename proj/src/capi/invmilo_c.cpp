// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#include "invmilo/invmilo.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "bench.hpp"
#include "driver.hpp"
#include "error.hpp"
#include "genset.hpp"
#include "instance_io.hpp"
#include "mps.hpp"
#include "numfmt.hpp"

struct invmilo_instance {
  invmilo::InverseInstance inst;
};

struct invmilo_report {
  invmilo::SolveReport report;
  std::string status;
  std::string log;
};

namespace {

thread_local std::string g_last_error;

invmilo_status map_code(invmilo::ErrorCode code) {
  using invmilo::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return INVMILO_E_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return INVMILO_E_DIMENSION_MISMATCH;
    case ErrorCode::Parse: return INVMILO_E_PARSE;
    case ErrorCode::Io: return INVMILO_E_IO;
    case ErrorCode::NumericalFailure: return INVMILO_E_NUMERICAL;
    case ErrorCode::InternalConsistency: return INVMILO_E_INTERNAL;
    case ErrorCode::UnboundedBox: return INVMILO_E_UNBOUNDED_BOX;
    case ErrorCode::TooLarge: return INVMILO_E_TOO_LARGE;
    case ErrorCode::GNotSubsetOfX: return INVMILO_E_G_NOT_SUBSET;
  }
  return INVMILO_E_UNKNOWN;
}

template <class F>
invmilo_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return INVMILO_OK;
  } catch (const invmilo::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return INVMILO_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return INVMILO_E_UNKNOWN;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw invmilo::Error(invmilo::ErrorCode::InvalidArgument, what);
}

std::optional<double> limit_of(double seconds) {
  if (seconds < 0.0) return std::nullopt;
  return seconds;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

extern "C" {

int invmilo_status_is_user_error(invmilo_status status) {
  switch (status) {
    case INVMILO_E_INVALID_ARGUMENT:
    case INVMILO_E_DIMENSION_MISMATCH:
    case INVMILO_E_PARSE:
    case INVMILO_E_IO:
    case INVMILO_E_UNBOUNDED_BOX:
    case INVMILO_E_TOO_LARGE:
    case INVMILO_E_G_NOT_SUBSET:
      return 1;
    default:
      return 0;
  }
}

const char* invmilo_status_name(invmilo_status status) {
  switch (status) {
    case INVMILO_OK: return "ok";
    case INVMILO_E_INVALID_ARGUMENT: return "invalid argument";
    case INVMILO_E_DIMENSION_MISMATCH: return "dimension mismatch";
    case INVMILO_E_PARSE: return "parse error";
    case INVMILO_E_IO: return "i/o error";
    case INVMILO_E_NUMERICAL: return "numerical failure";
    case INVMILO_E_INTERNAL: return "internal error";
    case INVMILO_E_UNBOUNDED_BOX: return "unbounded box";
    case INVMILO_E_TOO_LARGE: return "too large";
    case INVMILO_E_G_NOT_SUBSET: return "generator point outside the region";
    case INVMILO_E_UNKNOWN: break;
  }
  return "unknown error";
}

const char* invmilo_last_error(void) { return g_last_error.c_str(); }

const char* invmilo_version(void) { return "0.1.0"; }

size_t invmilo_variant_count(void) { return invmilo::preset_names().size(); }

const char* invmilo_variant_name(size_t index) {
  const auto& names = invmilo::preset_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

invmilo_status invmilo_instance_read(const char* path, invmilo_instance** out) {
  return guarded([&] {
    require(path && out, "invmilo_instance_read: null argument");
    *out = nullptr;
    auto h = std::make_unique<invmilo_instance>();
    h->inst = invmilo::read_instance_file(path);
    *out = h.release();
  });
}

invmilo_status invmilo_instance_parse(const char* json_text, invmilo_instance** out) {
  return guarded([&] {
    require(json_text && out, "invmilo_instance_parse: null argument");
    *out = nullptr;
    auto h = std::make_unique<invmilo_instance>();
    h->inst = invmilo::parse_instance_json(json_text);
    *out = h.release();
  });
}

void invmilo_instance_free(invmilo_instance* inst) { delete inst; }

size_t invmilo_instance_dim(const invmilo_instance* inst) { return inst ? inst->inst.problem.n : 0; }

const char* invmilo_instance_label(const invmilo_instance* inst) {
  return inst ? inst->inst.label.c_str() : "";
}

void invmilo_options_init(invmilo_options* opts) {
  if (!opts) return;
  opts->time_limit = -1.0;
  opts->seed = 0;
  opts->max_iters = invmilo::SolveLimits{}.max_iters;
  opts->record_timings = 1;
  opts->use_duality = 0;
}

invmilo_status invmilo_solve(const invmilo_instance* inst, const char* variant,
                             const invmilo_options* opts, invmilo_report** out) {
  return guarded([&] {
    require(inst && variant && out, "invmilo_solve: null argument");
    *out = nullptr;
    invmilo_options o;
    invmilo_options_init(&o);
    if (opts) o = *opts;
    auto cfg = invmilo::preset(variant);
    cfg.params.seed = o.seed;
    cfg.master.use_duality_constraints = o.use_duality != 0;
    invmilo::SolveLimits limits;
    limits.time_limit = limit_of(o.time_limit);
    limits.max_iters = o.max_iters;
    limits.record_timings = o.record_timings != 0;
    auto h = std::make_unique<invmilo_report>();
    h->report = invmilo::solve_inverse(inst->inst, cfg, limits);
    h->status = invmilo::to_string(h->report.status);
    h->log = invmilo::log_csv(h->report);
    *out = h.release();
  });
}

void invmilo_report_free(invmilo_report* report) { delete report; }

const char* invmilo_report_status(const invmilo_report* r) { return r ? r->status.c_str() : ""; }
double invmilo_report_objective(const invmilo_report* r) { return r ? r->report.objective : 0.0; }
size_t invmilo_report_iterations(const invmilo_report* r) { return r ? r->report.iterations : 0; }
size_t invmilo_report_cuts(const invmilo_report* r) { return r ? r->report.cuts : 0; }
size_t invmilo_report_dim(const invmilo_report* r) { return r ? r->report.c_star.size() : 0; }
const double* invmilo_report_cost(const invmilo_report* r) {
  return r && !r->report.c_star.empty() ? r->report.c_star.data() : nullptr;
}
double invmilo_report_total_seconds(const invmilo_report* r) { return r ? r->report.total_s : 0.0; }
const char* invmilo_report_log_csv(const invmilo_report* r) { return r ? r->log.c_str() : ""; }

invmilo_status invmilo_generate(const char* mps_path, uint64_t seed, double time_limit,
                                const char* out_dir, size_t* written, int* dropped) {
  return guarded([&] {
    require(mps_path && out_dir, "invmilo_generate: null argument");
    if (written) *written = 0;
    if (dropped) *dropped = 0;
    auto problem = invmilo::read_mps_file(mps_path);
    if (problem.name.empty()) problem.name = std::filesystem::path(mps_path).stem().string();
    const auto gen = invmilo::generate_instances(problem, seed, limit_of(time_limit));
    if (dropped) *dropped = gen.dropped ? 1 : 0;
    std::filesystem::create_directories(out_dir);
    for (const auto& inst : gen.instances) {
      const auto path = std::filesystem::path(out_dir) / (inst.label + ".json");
      invmilo::write_instance_file(path.string(), inst);
      if (written) ++*written;
    }
  });
}

invmilo_status invmilo_bench(const char* dir, const char* variants, double time_limit,
                             int record_timings, const char* out_csv, size_t* rows) {
  return guarded([&] {
    require(dir && variants && out_csv, "invmilo_bench: null argument");
    if (rows) *rows = 0;
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
      throw invmilo::Error(invmilo::ErrorCode::Io, std::string("not a directory: ") + dir);
    }
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<invmilo::InverseInstance> instances;
    for (const auto& f : files) {
      auto inst = invmilo::read_instance_file(f.string());
      if (inst.label.empty()) inst.label = f.stem().string();
      instances.push_back(std::move(inst));
    }
    const auto names = split_list(variants);
    require(!names.empty(), "invmilo_bench: empty variant list");
    const auto result =
        invmilo::run_bench(instances, names, limit_of(time_limit), record_timings != 0);
    invmilo::write_text_file(out_csv, invmilo::results_csv(result));
    if (rows) *rows = result.size();
  });
}

invmilo_status invmilo_profile(const char* results_csv, const char* out_csv, size_t* points) {
  return guarded([&] {
    require(results_csv && out_csv, "invmilo_profile: null argument");
    const auto rows = invmilo::parse_results_csv(invmilo::read_text_file(results_csv));
    const auto prof = invmilo::performance_profile(rows);
    invmilo::write_text_file(out_csv, invmilo::profile_csv(prof));
    if (points) *points = prof.size();
  });
}

invmilo_status invmilo_verify(const char* instance_path, invmilo_verify_mode mode,
                              const char* points_path, int* verdict, char** report) {
  return guarded([&] {
    require(instance_path && points_path && verdict, "invmilo_verify: null argument");
    if (report) *report = nullptr;
    const auto inst = invmilo::read_instance_file(instance_path);
    const auto points = invmilo::parse_point_list(invmilo::read_text_file(points_path));
    for (const auto& p : points) {
      if (p.size() != inst.problem.n) {
        throw invmilo::Error(invmilo::ErrorCode::DimensionMismatch,
                             "points file: vector length differs from the instance dimension");
      }
    }
    const auto region = invmilo::enumerate_feasible(inst.problem);
    std::string text;
    if (mode == INVMILO_VERIFY_GENERATOR) {
      const auto v = invmilo::is_generator_set(points, inst.x_hat, region);
      text += "is_generator," + bool_text(v.is_generator) + "\n";
      const bool subset = std::all_of(points.begin(), points.end(), [&](const auto& g) {
        return std::find(region.points.begin(), region.points.end(), g) != region.points.end();
      });
      if (subset) {
        const auto ff = invmilo::is_forward_feasible_generator_set(points, inst.x_hat, region);
        text += "forward_feasible," + bool_text(ff.is_generator) + "\n";
        text += "sampled_check_agrees," + bool_text(ff.sampled_check_agrees) + "\n";
      } else {
        text += "forward_feasible,false\n";
      }
      if (!v.is_generator) {
        text += "witness," + invmilo::format_point(v.witness) + "\n";
        text += "uncovered," + invmilo::format_point(v.uncovered) + "\n";
      }
      *verdict = v.is_generator ? 1 : 0;
    } else if (mode == INVMILO_VERIFY_INVERSE_FEASIBLE) {
      bool all = true;
      for (const auto& c : points) {
        const bool ok = invmilo::is_inverse_feasible(c, inst.x_hat, region.points);
        all = all && ok;
        text += invmilo::format_point(c) + "," + bool_text(ok) + "\n";
      }
      *verdict = all ? 1 : 0;
    } else {
      require(false, "invmilo_verify: unknown mode");
    }
    if (report) *report = dup_string(text);
  });
}

void invmilo_string_free(char* s) { std::free(s); }

}  // extern "C"
