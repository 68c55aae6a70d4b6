/*
 * Copyright 2026 The heyde toolkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C API of the heyde shared library: scenario loading, execution and report
 * rendering behind opaque handles. All functions returning int use the
 * heyde_status codes; on failure heyde_last_error() carries a message for
 * the calling thread. Strings returned through char** are heap-allocated
 * and must be released with heyde_string_free().
 */

#ifndef HEYDE_H
#define HEYDE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct heyde_scenario heyde_scenario;
typedef struct heyde_report heyde_report;

enum heyde_status {
    HEYDE_OK = 0,
    HEYDE_ERROR_INVALID_ARGUMENT = 1,
    HEYDE_ERROR_PARSE = 2,
    HEYDE_ERROR_VALIDATION = 3,
    HEYDE_ERROR_CAPACITY = 4,
    HEYDE_ERROR_DOMAIN = 5,
    HEYDE_ERROR_IO = 6,
    HEYDE_ERROR_INTERNAL = 7
};

const char* heyde_version(void);
const char* heyde_status_name(int status);

/* Message of the most recent failure on this thread; empty string if none. */
const char* heyde_last_error(void);

/* --- scenarios ---------------------------------------------------------- */

int heyde_scenario_from_file(const char* path, heyde_scenario** out);
int heyde_scenario_from_string(const char* text, const char* name, heyde_scenario** out);
int heyde_scenario_bundled(const char* name, heyde_scenario** out);
void heyde_scenario_free(heyde_scenario* sc);

const char* heyde_scenario_name(const heyde_scenario* sc);
const char* heyde_scenario_description(const heyde_scenario* sc);

int heyde_bundled_count(void);
const char* heyde_bundled_name(int index);
/* NULL when the name is unknown. */
const char* heyde_bundled_text(const char* name);

/* --- execution ---------------------------------------------------------- */

typedef struct heyde_run_options {
    uint64_t seed;
    int has_seed;
    int workers;
    double grid_tolerance;
    int has_grid_tolerance;
    double exact_tolerance;
    int has_exact_tolerance;
    int include_timings;
} heyde_run_options;

void heyde_run_options_init(heyde_run_options* opts);

int heyde_run(const heyde_scenario* sc, const heyde_run_options* opts, heyde_report** out);
void heyde_report_free(heyde_report* report);

int heyde_report_render_text(const heyde_report* report, char** out);
int heyde_report_render_json(const heyde_report* report, char** out);
int heyde_report_check_count(const heyde_report* report);
/* 1 when every expectation annotation matched, else 0. */
int heyde_report_expectations_met(const heyde_report* report);

void heyde_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HEYDE_H */
