/*
 * Copyright 2026 The cusplab Authors
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

/* C interface to the cusplab library. Every function returns a status code;
 * on failure cusplab_last_error() describes the problem for the calling
 * thread. Strings returned through char** are owned by the caller and must
 * be released with cusplab_string_free. */
#ifndef CUSPLAB_CUSPLAB_H
#define CUSPLAB_CUSPLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(CUSPLAB_BUILDING_LIBRARY)
#define CUSPLAB_API __attribute__((visibility("default")))
#else
#define CUSPLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    CUSPLAB_OK = 0,
    CUSPLAB_E_IDENTITY = 1, /* a checked identity failed */
    CUSPLAB_E_USAGE = 2,    /* invalid argument or undefined input */
    CUSPLAB_E_BUDGET = 3,   /* enumeration over the term budget */
    CUSPLAB_E_INTERNAL = 70
} cusplab_status;

typedef struct cusplab_report cusplab_report;
typedef struct cusplab_jordan cusplab_jordan;

typedef struct {
    long qmax;
    long nmax;
    uint64_t seed;
    unsigned threads; /* 0: CUSPLAB_THREADS, else hardware */
    uint64_t term_budget;
    uint64_t decomp_instances;
    long relprec;
} cusplab_verify_options;

CUSPLAB_API const char* cusplab_version(void);
CUSPLAB_API const char* cusplab_last_error(void);
CUSPLAB_API void cusplab_string_free(char* s);

CUSPLAB_API void cusplab_verify_options_default(cusplab_verify_options* opt);
/* suites: comma separated names, or "all" */
CUSPLAB_API cusplab_status cusplab_verify(const char* suites, const cusplab_verify_options* opt,
                                          cusplab_report** out);
CUSPLAB_API int cusplab_report_passed(const cusplab_report* r);
CUSPLAB_API size_t cusplab_report_failure_count(const cusplab_report* r);
CUSPLAB_API cusplab_status cusplab_report_json(const cusplab_report* r, int indent, char** out);
CUSPLAB_API cusplab_status cusplab_report_text(const cusplab_report* r, char** out);
CUSPLAB_API void cusplab_report_free(cusplab_report* r);

/* chi_m1: central character at -1, +1 or -1 */
CUSPLAB_API cusplab_status cusplab_jordan_compute(int n, int q, int chi_m1, cusplab_jordan** out);
CUSPLAB_API int cusplab_jordan_all_ok(const cusplab_jordan* j);
CUSPLAB_API cusplab_status cusplab_jordan_json(const cusplab_jordan* j, int indent, char** out);
CUSPLAB_API cusplab_status cusplab_jordan_text(const cusplab_jordan* j, char** out);
CUSPLAB_API void cusplab_jordan_free(cusplab_jordan* j);

/* case_name: gl1-b0, gl1-b1, gl2n-b0, gl2n-b1; delta: quadratic, trivial.
 * Returns CUSPLAB_E_IDENTITY, with the rendered output, when the sum
 * disagrees with its closed form. */
CUSPLAB_API cusplab_status cusplab_hecke(const char* case_name, int q, int n, const char* delta, int a, int chi_m1,
                                         uint64_t budget, int json, char** out);
CUSPLAB_API cusplab_status cusplab_classify(int q, int n, int json, char** out);
CUSPLAB_API cusplab_status cusplab_gauss(int q, int json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CUSPLAB_CUSPLAB_H */
