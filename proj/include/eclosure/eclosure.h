// Copyright 2026 The eclosure Authors
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

#ifndef ECLOSURE_ECLOSURE_H
#define ECLOSURE_ECLOSURE_H

/* C interface to the eclosure engine.  Every call returns a status code;
 * on failure ecl_last_error() describes the problem (thread-local, valid
 * until the next failing call on the same thread).  Strings returned
 * through char** out-parameters are owned by the caller and released with
 * ecl_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(ECL_BUILDING_LIBRARY)
#define ECL_API __attribute__((visibility("default")))
#else
#define ECL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ecl_status {
  ECL_OK = 0,
  ECL_ERR_SYNTAX = 1,
  ECL_ERR_VALIDATION = 2,
  ECL_ERR_INVALID_ARGUMENT = 3,
  ECL_ERR_UNSUPPORTED = 4,
  ECL_ERR_LANGUAGE_MISMATCH = 5,
  ECL_ERR_NULL_POINTER = 6,
  ECL_ERR_INTERNAL = 7
} ecl_status;

typedef enum ecl_cardinal_kind {
  ECL_CARD_FINITE = 0,
  ECL_CARD_ALEPH0 = 1,
  ECL_CARD_AT_LEAST_CONTINUUM = 2
} ecl_cardinal_kind;

typedef struct ecl_cardinal {
  ecl_cardinal_kind kind;
  uint64_t value; /* finite values only */
} ecl_cardinal;

typedef enum ecl_format { ECL_FORMAT_JSON = 0, ECL_FORMAT_TEXT = 1 } ecl_format;

enum {
  ECL_SECTION_COMPLETION = 1u,
  ECL_SECTION_GENSET = 2u,
  ECL_SECTION_SPECTRUM = 4u,
  ECL_SECTION_ORACLE = 8u,
  ECL_SECTION_ALL = 7u
};

typedef struct ecl_report_options {
  const char* command; /* echoed in the report; NULL means "analyze" */
  unsigned sections;   /* ECL_SECTION_* bits */
  size_t depth;        /* oracle depth */
  uint64_t seed;
  ecl_format format;
  int pretty;
} ecl_report_options;

typedef struct ecl_family ecl_family;

ECL_API const char* ecl_version(void);
ECL_API const char* ecl_last_error(void);
ECL_API void ecl_string_free(char* s);
ECL_API void ecl_report_options_init(ecl_report_options* opt);

ECL_API ecl_status ecl_family_parse(const char* text, ecl_family** out);
ECL_API void ecl_family_free(ecl_family* f);
ECL_API ecl_status ecl_family_print(const ecl_family* f, char** out);
ECL_API ecl_status ecl_family_with_spectrum(ecl_cardinal mu, ecl_family** out);

ECL_API ecl_status ecl_accumulation_points(const ecl_family* f, ecl_cardinal* out);
ECL_API ecl_status ecl_has_least_generating_set(const ecl_family* f, int* out);
ECL_API ecl_status ecl_e_spectrum(const ecl_family* f, ecl_cardinal* out, int* exact);

ECL_API ecl_status ecl_report(const ecl_family* f, const ecl_report_options* opt, char** out);
/* *passed is 1 when every oracle check passes. */
ECL_API ecl_status ecl_oracle_report(const ecl_family* f, size_t depth, uint64_t seed,
                                     ecl_format format, int pretty, char** out, int* passed);
ECL_API ecl_status ecl_catalog_report(ecl_format format, int pretty, char** out);
/* b may be NULL for unary ops. */
ECL_API ecl_status ecl_sig_report(const char* op, const char* a, const char* b,
                                  ecl_format format, int pretty, char** out);
ECL_API ecl_status ecl_ptoy_report(const char* op, const char* a, const char* b,
                                   ecl_format format, int pretty, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ECLOSURE_ECLOSURE_H */
