// Copyright 2026 The cforge Authors
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

/*
 * C interface to the cforge competency-model engine.
 *
 * A model is an opaque, immutable handle. Every query returns a JSON
 * document through `out_json`; the documents are described in
 * docs/interchange.md. On failure the same out-parameter receives a
 * diagnostics document ({"diagnostics": [...]}) explaining the problem.
 * Strings handed out by the library are released with cforge_string_free.
 *
 * Handles may be shared between threads: every function taking a
 * `const cforge_model*` is safe to call concurrently.
 */

#ifndef CFORGE_CFORGE_H
#define CFORGE_CFORGE_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(CFORGE_BUILDING_LIBRARY)
#define CFORGE_API __declspec(dllexport)
#else
#define CFORGE_API __declspec(dllimport)
#endif
#else
#define CFORGE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cforge_model cforge_model;

typedef enum cforge_status {
    CFORGE_OK = 0,
    CFORGE_E_INVALID_ARGUMENT = 1, /* null pointer or unknown option value */
    CFORGE_E_DIAGNOSTICS = 2,      /* sources did not parse or validate */
    CFORGE_E_UNKNOWN_ID = 3,       /* a queried id does not exist */
    CFORGE_E_DELTA = 4,            /* what-if delta malformed or unresolvable */
    CFORGE_E_IO = 5,               /* file system failure */
    CFORGE_E_EMPTY_COHORT = 6,     /* statistics over zero achievement pages */
    CFORGE_E_INTERNAL = 7          /* unexpected failure; a bug */
} cforge_status;

typedef enum cforge_delta_format {
    CFORGE_DELTA_AUTO = 0, /* JSON when the text starts with '{', DSL otherwise */
    CFORGE_DELTA_JSON = 1,
    CFORGE_DELTA_DSL = 2
} cforge_delta_format;

/* Library version, e.g. "1.0.0". Static storage; do not free. */
CFORGE_API const char* cforge_version(void);

/* Short name of a status code, e.g. "CFORGE_E_UNKNOWN_ID". Static storage. */
CFORGE_API const char* cforge_status_name(cforge_status status);

CFORGE_API void cforge_string_free(char* text);

/*
 * Loads every .cdsl file of `dir` (or its model.json). On success *out
 * receives the model and *out_json any warnings; on failure *out is set to
 * NULL and *out_json holds the errors. `out_json` may be NULL.
 */
CFORGE_API cforge_status cforge_model_load_dir(const char* dir, cforge_model** out, char** out_json);

/* Compiles in-memory sources: `count` pairs of file name and UTF-8 text. */
CFORGE_API cforge_status cforge_model_load_sources(const char* const* names, const char* const* texts,
                                                   size_t count, cforge_model** out, char** out_json);

CFORGE_API void cforge_model_free(cforge_model* model);

/* Element counts and the snapshot fingerprint. */
CFORGE_API cforge_status cforge_model_summary(const cforge_model* model, char** out_json);

CFORGE_API cforge_status cforge_competencies(const cforge_model* model, char** out_json);

/* `strict_fpk` != 0 counts skills and dispositions only when exercised by a
 * course that also targets one of the competency's topics. */
CFORGE_API cforge_status cforge_coverage(const cforge_model* model, const char* competency, int strict_fpk,
                                         char** out_json);

CFORGE_API cforge_status cforge_coverage_matrix(const cforge_model* model, char** out_json);

CFORGE_API cforge_status cforge_trace_topic(const cforge_model* model, const char* topic, char** out_json);

CFORGE_API cforge_status cforge_trace_competency(const cforge_model* model, const char* competency,
                                                 char** out_json);

CFORGE_API cforge_status cforge_gaps(const cforge_model* model, int strict_fpk, char** out_json);

CFORGE_API cforge_status cforge_pathway_profile(const cforge_model* model, const char* pathway, int strict_fpk,
                                                char** out_json);

/* Overlays `delta` on the model and reports the gap diff. The model is not
 * modified. */
CFORGE_API cforge_status cforge_whatif(const cforge_model* model, const char* delta, cforge_delta_format format,
                                       int strict_fpk, char** out_json);

CFORGE_API cforge_status cforge_attainment(const cforge_model* model, const char* student, const char* competency,
                                           char** out_json);

CFORGE_API cforge_status cforge_cohort_stats(const cforge_model* model, char** out_json);

/*
 * Exports in `format` ("dsl", "json", "wiki" or "dot"). With `out_dir`
 * NULL, *out_json lists the files with their text ({"files":[{"name",
 * "text"}]}); otherwise the files are written there and only their names
 * are listed.
 */
CFORGE_API cforge_status cforge_export(const cforge_model* model, const char* format, const char* out_dir,
                                       char** out_json);

/* Stable hash of the canonical form, as a plain (non-JSON) string. */
CFORGE_API cforge_status cforge_fingerprint(const cforge_model* model, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CFORGE_CFORGE_H */
