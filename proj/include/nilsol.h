/*
 * Copyright 2026 The nilsol Authors
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
#ifndef NILSOL_H
#define NILSOL_H

#include <stddef.h>
#include <stdint.h>

#if defined(NILSOL_BUILDING)
#define NILSOL_API __attribute__((visibility("default")))
#else
#define NILSOL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nilsol_status {
  NILSOL_OK = 0,
  NILSOL_E_INVALID_ARGUMENT = 1,
  NILSOL_E_PARSE = 2,
  NILSOL_E_IO = 3,
  NILSOL_E_FIXTURE = 4,
  NILSOL_E_INTERNAL = 5
} nilsol_status;

typedef enum nilsol_format { NILSOL_FORMAT_TABLE = 0, NILSOL_FORMAT_JSON = 1, NILSOL_FORMAT_CSV = 2 } nilsol_format;

typedef enum nilsol_grouping { NILSOL_GROUPING_PER_TRIPLE = 0, NILSOL_GROUPING_BY_TARGET = 1 } nilsol_grouping;

typedef enum nilsol_verdict {
  NILSOL_VERDICT_SOLITON = 0,
  NILSOL_VERDICT_NONSOLITON = 1,
  NILSOL_VERDICT_CANDIDATE = 2,
  NILSOL_VERDICT_EXCLUDED = 3
} nilsol_verdict;

typedef struct nilsol_options {
  int direct_sum_filter;
  int invertible_filter;
  int positivity_filter;
  int ordered_type_filter;
  int jacobi_screen;
  int strict_positivity;
  int resolve;
  nilsol_grouping grouping;
  unsigned jobs;
} nilsol_options;

typedef struct nilsol_counts {
  size_t solitons;
  size_t candidates;
  size_t nonsolitons;
} nilsol_counts;

typedef struct nilsol_report nilsol_report;

NILSOL_API const char* nilsol_version(void);

/* Message of the last failed call on this thread ("" if none). */
NILSOL_API const char* nilsol_last_error(void);
/* Position of the last parse error on this thread, 0 when not a parse error. */
NILSOL_API int nilsol_last_error_line(void);
NILSOL_API int nilsol_last_error_column(void);

/* Releases strings returned through char** out parameters. */
NILSOL_API void nilsol_string_free(char* s);

NILSOL_API void nilsol_options_default(nilsol_options* opts);

/* Admissible triples for n, one "i,j,k" per line. */
NILSOL_API nilsol_status nilsol_theta(int n, char** out_text, size_t* out_count);

/* Largest n accepted by nilsol_classify, and the largest without a warning. */
NILSOL_API int nilsol_max_dimension(void);
NILSOL_API int nilsol_supported_dimension(void);

NILSOL_API nilsol_status nilsol_classify(int n, const nilsol_options* opts, nilsol_report** out);
NILSOL_API void nilsol_report_free(nilsol_report* r);

NILSOL_API int nilsol_report_n(const nilsol_report* r);
NILSOL_API size_t nilsol_report_record_count(const nilsol_report* r);
NILSOL_API size_t nilsol_report_excluded(const nilsol_report* r);
/* Largest nullity present among non-excluded records, or -1. */
NILSOL_API int nilsol_report_max_nullity(const nilsol_report* r);
NILSOL_API nilsol_status nilsol_report_counts(const nilsol_report* r, size_t nullity, nilsol_counts* out);
NILSOL_API nilsol_status nilsol_report_record(const nilsol_report* r, size_t index, uint64_t* mask,
                                              nilsol_verdict* verdict, int* nullity);

NILSOL_API nilsol_status nilsol_report_render(const nilsol_report* r, nilsol_format f, char** out_text);
NILSOL_API nilsol_status nilsol_report_write(const nilsol_report* r, nilsol_format f, const char* path);

/* Checks a bracket table given in vector notation or JSON. *valid is set
   only when the text parses. */
NILSOL_API nilsol_status nilsol_verify(const char* text, int* valid, char** out_summary);

/* Classifies one index set ("i,j,k;..." or a decimal mask). */
NILSOL_API nilsol_status nilsol_solve(int n, const char* lambda, const nilsol_options* opts, nilsol_format f,
                                      nilsol_verdict* verdict, char** out_text);

/* Itemized differences against the reference tables in fixtures_dir. */
NILSOL_API nilsol_status nilsol_compare(const nilsol_report* r, const char* fixtures_dir, char** out_text,
                                        size_t* max_row_diff);

#ifdef __cplusplus
}
#endif

#endif
