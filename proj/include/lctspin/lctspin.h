/*
   Copyright 2026 The lctspin Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LCTSPIN_LCTSPIN_H
#define LCTSPIN_LCTSPIN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LCTS_API __declspec(dllexport)
#else
#define LCTS_API __attribute__((visibility("default")))
#endif

typedef enum lcts_status {
    LCTS_OK = 0,
    LCTS_ERR_CONSTRAINT = 1,
    LCTS_ERR_DIMENSION = 2,
    LCTS_ERR_PARSE = 3,
    LCTS_ERR_UNKNOWN_SUITE = 4,
    LCTS_ERR_SIZE_LIMIT = 5,
    LCTS_ERR_EXP_DIVERGENCE = 6,
    LCTS_ERR_NO_CONVENTION = 7,
    LCTS_ERR_AMBIGUOUS_CONVENTION = 8,
    LCTS_ERR_CONVENTION_MISMATCH = 9,
    LCTS_ERR_INVALID_ARGUMENT = 10,
    LCTS_ERR_INTERNAL = 11
} lcts_status;

/* Validated LCT parameters. */
typedef struct lcts_params lcts_params;
/* Parameters with g, X, O, theta and S computed. */
typedef struct lcts_bundle lcts_bundle;

typedef struct lcts_run_config {
    int n_plus;
    int n_minus;
    uint64_t seed;
    /* Overrides every numeric tolerance when > 0. */
    double tol;
    int unsafe_size;
    /* Random draws per randomized suite; <= 0 selects the default. */
    int draws;
} lcts_run_config;

/* (1, 0), seed 1, default tolerances and draws. */
LCTS_API lcts_run_config lcts_default_config(void);

/* Message for the most recent failure on the calling thread; "" if none. */
LCTS_API const char* lcts_last_error(void);
LCTS_API const char* lcts_status_name(lcts_status status);

/* Strings returned through char** out-parameters are owned by the caller. */
LCTS_API void lcts_string_free(char* s);

LCTS_API lcts_status lcts_params_parse(const char* json, lcts_params** out);
LCTS_API void lcts_params_free(lcts_params* params);
LCTS_API int lcts_params_dimension(const lcts_params* params);
LCTS_API lcts_status lcts_params_to_json(const lcts_params* params, char** out);

/* Uses the spin convention selected by the probe for the parameters' signature. */
LCTS_API lcts_status lcts_bundle_create(const lcts_params* params, lcts_bundle** out);
LCTS_API void lcts_bundle_free(lcts_bundle* bundle);
LCTS_API lcts_status lcts_bundle_to_json(const lcts_bundle* bundle, char** out);
/* Side of the square spin matrix S. */
LCTS_API size_t lcts_bundle_spinor_dim(const lcts_bundle* bundle);
/* out = S v for complex vectors stored as interleaved (re, im) pairs of length 2 * dim. */
LCTS_API lcts_status lcts_bundle_apply_spin(const lcts_bundle* bundle, const double* v, double* out, size_t dim);

/* Runs the comma-separated suites ("all" expands). Unknown names and size
   caps are rejected before any suite runs. *all_pass may be NULL. */
LCTS_API lcts_status lcts_verify(const lcts_run_config* config, const char* suites, char** out_json, int* all_pass);
LCTS_API lcts_status lcts_conventions(const lcts_run_config* config, char** out_json);
LCTS_API lcts_status lcts_tables(const lcts_run_config* config, char** out_json);
/* One-mode invariant report at N = 1; the exploratory quartic search at N = 2.
   *all_pass reflects the N = 1 report and is 1 for the exploratory search. */
LCTS_API lcts_status lcts_invariant(const lcts_run_config* config, char** out_json, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
