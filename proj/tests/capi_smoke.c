/* SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 The invmilo Authors
 *
 * Exercises the C interface from plain C. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "invmilo/invmilo.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static const char* kEc =
    "{\"name\": \"ec\", \"problem\": {\"name\": \"ec\", \"n\": 2,"
    " \"lower\": [\"0\", \"0\"], \"upper\": [\"1\", \"1\"], \"integer\": [true, true],"
    " \"rows\": [{\"name\": \"cap\", \"coeffs\": [[0, \"1\"], [1, \"0.6\"]],"
    " \"relation\": \"<=\", \"rhs\": \"1\"}]},"
    " \"c0\": [\"-1\", \"-1\"], \"x_hat\": [\"0\", \"1\"]}";

static const char* kKnapsack =
    "{\"name\": \"k\", \"problem\": {\"n\": 2,"
    " \"lower\": [\"0\", \"0\"], \"upper\": [\"3\", \"3\"], \"integer\": [true, true],"
    " \"rows\": [{\"coeffs\": [[0, 1], [1, 1]], \"relation\": \">=\", \"rhs\": 2}]},"
    " \"c0\": [1, 2], \"x_hat\": [1, 1]}";

int main(void) {
  invmilo_instance* inst = NULL;
  invmilo_report* rep = NULL;
  invmilo_options opts;
  size_t k;

  EXPECT(invmilo_variant_count() == 5);
  EXPECT(strcmp(invmilo_variant_name(0), "CP") == 0);
  EXPECT(invmilo_variant_name(99) == NULL);

  EXPECT(invmilo_instance_parse(kEc, &inst) == INVMILO_OK);
  EXPECT(invmilo_instance_dim(inst) == 2);
  EXPECT(strcmp(invmilo_instance_label(inst), "ec") == 0);

  invmilo_options_init(&opts);
  opts.record_timings = 0;
  for (k = 0; k < invmilo_variant_count(); ++k) {
    EXPECT(invmilo_solve(inst, invmilo_variant_name(k), &opts, &rep) == INVMILO_OK);
    EXPECT(strcmp(invmilo_report_status(rep), "Optimal") == 0);
    EXPECT(invmilo_report_objective(rep) == 0.0);
    EXPECT(invmilo_report_dim(rep) == 2);
    EXPECT(invmilo_report_cost(rep)[0] == -1.0 && invmilo_report_cost(rep)[1] == -1.0);
    EXPECT(invmilo_report_cuts(rep) == 0);
    EXPECT(invmilo_report_total_seconds(rep) == 0.0);
    EXPECT(strncmp(invmilo_report_log_csv(rep), "iteration,origin,", 17) == 0);
    invmilo_report_free(rep);
    rep = NULL;
  }
  invmilo_instance_free(inst);

  EXPECT(invmilo_instance_parse(kKnapsack, &inst) == INVMILO_OK);
  EXPECT(invmilo_solve(inst, "CPTR-ES-DR", NULL, &rep) == INVMILO_OK);
  EXPECT(fabs(invmilo_report_objective(rep) - 1.0) < 1e-9);
  EXPECT(invmilo_report_iterations(rep) == invmilo_report_cuts(rep) + 1);
  invmilo_report_free(rep);

  rep = NULL;
  EXPECT(invmilo_solve(inst, "NOPE", NULL, &rep) == INVMILO_E_INVALID_ARGUMENT);
  EXPECT(rep == NULL);
  EXPECT(strlen(invmilo_last_error()) > 0);
  EXPECT(invmilo_status_is_user_error(INVMILO_E_INVALID_ARGUMENT));
  EXPECT(!invmilo_status_is_user_error(INVMILO_E_INTERNAL));
  invmilo_instance_free(inst);

  inst = NULL;
  EXPECT(invmilo_instance_parse("{", &inst) == INVMILO_E_PARSE);
  EXPECT(inst == NULL);
  EXPECT(invmilo_instance_parse(NULL, &inst) == INVMILO_E_INVALID_ARGUMENT);
  EXPECT(invmilo_instance_read("/nonexistent/x.json", &inst) == INVMILO_E_IO);
  EXPECT(strcmp(invmilo_status_name(INVMILO_E_PARSE), "parse error") == 0);

  invmilo_instance_free(NULL);
  invmilo_report_free(NULL);
  invmilo_string_free(NULL);

  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi smoke: ok\n");
  return 0;
}
