// Copyright 2026 The wp-effects Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the wp-effects library.
 *
 * Handles are opaque; every function that can fail returns a wpfx_status and
 * records a message retrievable with wpfx_last_error() on the calling thread.
 * Strings returned through `char** out` parameters are owned by the caller
 * and must be released with wpfx_string_free().
 */
#ifndef WPFX_WPFX_H_
#define WPFX_WPFX_H_

#include <stddef.h>

#if defined(_WIN32)
#define WPFX_API __declspec(dllexport)
#else
#define WPFX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wpfx_status {
  WPFX_OK = 0,
  WPFX_ERR_PARSE = 1,        /* malformed program text */
  WPFX_ERR_TYPE = 2,         /* the program does not type-check */
  WPFX_ERR_LITERAL = 3,      /* malformed or ill-shaped --env/--state literal */
  WPFX_ERR_RUNTIME = 4,      /* evaluation failed (overflow, ...) */
  WPFX_ERR_UNKNOWN_POST = 5, /* postcondition name not declared */
  WPFX_ERR_SWEEP = 6,        /* file shapes do not fit the sweep generator */
  WPFX_ERR_ARGUMENT = 7,     /* null handle, bad option, unchecked file */
  WPFX_ERR_INTERNAL = 99
} wpfx_status;

typedef enum wpfx_format { WPFX_FORMAT_JSON = 0, WPFX_FORMAT_TEXT = 1 } wpfx_format;

typedef struct wpfx_file wpfx_file;
typedef struct wpfx_report wpfx_report;

typedef struct wpfx_check_options {
  const char* post;  /* required */
  int sweep;         /* nonzero: check over the builtin program space */
  int bound;         /* sweep value bound, default 3 */
  int depth;         /* sweep AST height, default 4 */
  const char* env;   /* optional literal (rws only) */
  const char* state; /* optional literal (rws only) */
  size_t cap;        /* sweep case cap, 0 means 1000000 */
} wpfx_check_options;

WPFX_API const char* wpfx_version(void);

/* Message for the most recent failure on this thread ("" if none). */
WPFX_API const char* wpfx_last_error(void);

WPFX_API void wpfx_string_free(char* s);

/* Parses without type-checking; the handle can be printed but not run. */
WPFX_API wpfx_status wpfx_file_parse(const char* text, wpfx_file** out);

/* Parses and type-checks. */
WPFX_API wpfx_status wpfx_file_load(const char* text, wpfx_file** out);

WPFX_API void wpfx_file_free(wpfx_file* f);

/* Canonical program text; reparsing it yields an equal program. */
WPFX_API wpfx_status wpfx_file_print(const wpfx_file* f, char** out);

/* 0 for either programs, 1 for rws programs, -1 for a null handle. */
WPFX_API int wpfx_file_kind(const wpfx_file* f);

/* Runs the entry program and renders the outcome. */
WPFX_API wpfx_status wpfx_run(const wpfx_file* f, const char* env, const char* state,
                              wpfx_format format, char** out);

/* Fills `opts` with the defaults (bound 3, depth 4, cap 1000000). */
WPFX_API void wpfx_check_options_init(wpfx_check_options* opts);

WPFX_API wpfx_status wpfx_check(const wpfx_file* f, const wpfx_check_options* opts,
                                wpfx_report** out);

WPFX_API void wpfx_report_free(wpfx_report* r);

WPFX_API size_t wpfx_report_cases(const wpfx_report* r);
WPFX_API size_t wpfx_report_violations(const wpfx_report* r);
/* Cases whose weakest precondition does not hold. */
WPFX_API size_t wpfx_report_failing(const wpfx_report* r);
WPFX_API int wpfx_report_truncated(const wpfx_report* r);

WPFX_API wpfx_status wpfx_report_render(const wpfx_report* r, wpfx_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* WPFX_WPFX_H_ */
