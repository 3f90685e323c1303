/* SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 The invmilo Authors
 *
 * C interface to the invmilo inverse mixed-integer optimization solver.
 *
 * Every function that can fail returns an invmilo_status. On failure a
 * description is available from invmilo_last_error() until the next call on
 * the same thread. Objects returned through out-parameters are owned by the
 * caller and released with the matching *_free function; strings returned
 * from accessors stay valid for the lifetime of the owning object.
 */
#ifndef INVMILO_INVMILO_H
#define INVMILO_INVMILO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define INVMILO_API __declspec(dllexport)
#else
#define INVMILO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum invmilo_status {
  INVMILO_OK = 0,
  INVMILO_E_INVALID_ARGUMENT = 1,
  INVMILO_E_DIMENSION_MISMATCH = 2,
  INVMILO_E_PARSE = 3,
  INVMILO_E_IO = 4,
  INVMILO_E_NUMERICAL = 5,
  INVMILO_E_INTERNAL = 6,
  INVMILO_E_UNBOUNDED_BOX = 7,
  INVMILO_E_TOO_LARGE = 8,
  INVMILO_E_G_NOT_SUBSET = 9,
  INVMILO_E_UNKNOWN = 10
} invmilo_status;

/* Nonzero for statuses caused by bad input rather than a solver fault. */
INVMILO_API int invmilo_status_is_user_error(invmilo_status status);
INVMILO_API const char* invmilo_status_name(invmilo_status status);
INVMILO_API const char* invmilo_last_error(void);
INVMILO_API const char* invmilo_version(void);

/* Preset algorithm variants: CP, CP-ES, CPTR, CPTR-ES, CPTR-ES-DR. */
INVMILO_API size_t invmilo_variant_count(void);
INVMILO_API const char* invmilo_variant_name(size_t index);

typedef struct invmilo_instance invmilo_instance;

INVMILO_API invmilo_status invmilo_instance_read(const char* path, invmilo_instance** out);
INVMILO_API invmilo_status invmilo_instance_parse(const char* json_text, invmilo_instance** out);
INVMILO_API void invmilo_instance_free(invmilo_instance* inst);
INVMILO_API size_t invmilo_instance_dim(const invmilo_instance* inst);
INVMILO_API const char* invmilo_instance_label(const invmilo_instance* inst);

typedef struct invmilo_options {
  double time_limit;     /* seconds; negative means no limit */
  uint64_t seed;         /* dimensionality-reduction stream */
  size_t max_iters;      /* subroutine calls */
  int record_timings;    /* 0 reports every duration as 0 */
  int use_duality;       /* add y^T A = c rows to the master */
} invmilo_options;

INVMILO_API void invmilo_options_init(invmilo_options* opts);

typedef struct invmilo_report invmilo_report;

INVMILO_API invmilo_status invmilo_solve(const invmilo_instance* inst, const char* variant,
                                         const invmilo_options* opts, invmilo_report** out);
INVMILO_API void invmilo_report_free(invmilo_report* report);
/* "Optimal", "TimeLimit", "IterationLimit" or "ProvedInfeasible". */
INVMILO_API const char* invmilo_report_status(const invmilo_report* report);
INVMILO_API double invmilo_report_objective(const invmilo_report* report);
INVMILO_API size_t invmilo_report_iterations(const invmilo_report* report);
INVMILO_API size_t invmilo_report_cuts(const invmilo_report* report);
INVMILO_API size_t invmilo_report_dim(const invmilo_report* report);
INVMILO_API const double* invmilo_report_cost(const invmilo_report* report);
INVMILO_API double invmilo_report_total_seconds(const invmilo_report* report);
/* Per-iteration log, header
 * iteration,origin,tr_size,violation,master_objective,cutgen_s,master_s,point */
INVMILO_API const char* invmilo_report_log_csv(const invmilo_report* report);

/* Writes <label>.json for each generated instance into out_dir. *dropped is
 * set to 1 (and nothing written) when too few feasible draws were found. */
INVMILO_API invmilo_status invmilo_generate(const char* mps_path, uint64_t seed, double time_limit,
                                            const char* out_dir, size_t* written, int* dropped);

/* Solves every *.json instance in dir (name order) under each variant of
 * the comma-separated list and writes the results CSV. */
INVMILO_API invmilo_status invmilo_bench(const char* dir, const char* variants, double time_limit,
                                         int record_timings, const char* out_csv, size_t* rows);

INVMILO_API invmilo_status invmilo_profile(const char* results_csv, const char* out_csv,
                                           size_t* points);

typedef enum invmilo_verify_mode {
  INVMILO_VERIFY_GENERATOR = 0,
  INVMILO_VERIFY_INVERSE_FEASIBLE = 1
} invmilo_verify_mode;

/* Points file: one vector per line, entries separated by spaces, commas or
 * semicolons; '#' starts a comment. In generator mode the lines form G; in
 * inverse-feasible mode each line is a cost vector checked at the
 * instance's x_hat. *verdict is 1 when G generates, or when every cost
 * vector is inverse-feasible. *report receives a human-readable summary to
 * be released with invmilo_string_free. */
INVMILO_API invmilo_status invmilo_verify(const char* instance_path, invmilo_verify_mode mode,
                                          const char* points_path, int* verdict, char** report);

INVMILO_API void invmilo_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* INVMILO_INVMILO_H */
