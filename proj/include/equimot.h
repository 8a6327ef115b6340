// Copyright 2026 The equimot Authors
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

/* C interface to the equimot engine.
 *
 * Every object is an opaque handle created by a *_create / *_from_json /
 * computing call and released with the matching *_destroy. Calls return an
 * equimot_status; on failure the out-parameter is left untouched and
 * equimot_last_error() describes the problem for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * equimot_string_free(). Big integers cross the boundary as decimal strings.
 */
#ifndef EQUIMOT_H
#define EQUIMOT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EQUIMOT_BUILDING)
#    define EQUIMOT_API __declspec(dllexport)
#  else
#    define EQUIMOT_API __declspec(dllimport)
#  endif
#else
#  define EQUIMOT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum equimot_status {
  EQUIMOT_OK = 0,
  EQUIMOT_ERR_INVALID_GROUP = 1,
  EQUIMOT_ERR_INVALID_ARGUMENT = 2,
  EQUIMOT_ERR_NON_INVERTIBLE = 3,
  EQUIMOT_ERR_UNCOVERED_GENERATOR = 4,
  EQUIMOT_ERR_UNSUPPORTED_SCENARIO = 5,
  EQUIMOT_ERR_TOO_LARGE = 6,
  EQUIMOT_ERR_INCONSISTENT_COUNTS = 7,
  EQUIMOT_ERR_SINGULAR_CURVE = 8,
  EQUIMOT_ERR_UNSUPPORTED = 9,
  EQUIMOT_ERR_PARSE = 10,
  EQUIMOT_ERR_INTERNAL = 99
} equimot_status;

typedef struct equimot_group equimot_group;
typedef struct equimot_element equimot_element;
typedef struct equimot_witness equimot_witness;
typedef struct equimot_series equimot_series;
typedef struct equimot_table equimot_table;
typedef struct equimot_report equimot_report;

EQUIMOT_API const char* equimot_last_error(void);
EQUIMOT_API const char* equimot_status_name(equimot_status status);
EQUIMOT_API void equimot_string_free(char* s);

/* Groups. Characters are addressed by their 0-based index in the canonical
 * (lexicographic) order or by residue tuples of length rank. */
EQUIMOT_API equimot_status equimot_group_create(const int64_t* divisors, size_t count, equimot_group** out);
EQUIMOT_API equimot_status equimot_group_from_json(const char* json, equimot_group** out);
EQUIMOT_API void equimot_group_destroy(equimot_group* group);
EQUIMOT_API int64_t equimot_group_order(const equimot_group* group);
EQUIMOT_API int64_t equimot_group_exponent(const equimot_group* group);
EQUIMOT_API size_t equimot_group_rank(const equimot_group* group);
EQUIMOT_API equimot_status equimot_group_character(const equimot_group* group, int64_t index,
                                                   int64_t* residues, size_t capacity);

/* Ring elements. */
EQUIMOT_API equimot_status equimot_element_from_json(const char* json, equimot_element** out);
EQUIMOT_API equimot_status equimot_element_to_json(const equimot_element* e, char** out);
EQUIMOT_API equimot_status equimot_element_to_text(const equimot_element* e, char** out);
EQUIMOT_API int equimot_element_equal(const equimot_element* a, const equimot_element* b);
EQUIMOT_API void equimot_element_destroy(equimot_element* e);
EQUIMOT_API equimot_status equimot_sym_affine_line(const equimot_group* group, const int64_t* chi, size_t rank,
                                                   int64_t n, equimot_element** out);
EQUIMOT_API equimot_status equimot_sym_curve_class(const equimot_group* group, int64_t genus, int64_t n,
                                                   equimot_element** out);
EQUIMOT_API equimot_status equimot_regular_rep_class(const equimot_group* group, equimot_element** out);

/* Rational witnesses and truncated series. chars for the affine-space zeta
 * is count tuples of rank residues each, laid out contiguously. */
EQUIMOT_API equimot_status equimot_zeta_affine_line(const equimot_group* group, const int64_t* chi, size_t rank,
                                                    equimot_witness** out);
EQUIMOT_API equimot_status equimot_zeta_affine_space(const equimot_group* group, const int64_t* chars,
                                                     size_t count, equimot_witness** out);
EQUIMOT_API equimot_status equimot_zeta_curve(const equimot_group* group, int64_t genus, equimot_witness** out);
EQUIMOT_API equimot_status equimot_witness_from_json(const char* json, equimot_witness** out);
EQUIMOT_API equimot_status equimot_witness_to_json(const equimot_witness* w, char** out);
EQUIMOT_API equimot_status equimot_witness_to_text(const equimot_witness* w, char** out);
EQUIMOT_API void equimot_witness_destroy(equimot_witness* w);
EQUIMOT_API equimot_status equimot_witness_expand(const equimot_witness* w, int64_t order, equimot_series** out);
EQUIMOT_API equimot_status equimot_witness_check(const equimot_witness* w, const equimot_series* s, int* holds);

EQUIMOT_API equimot_status equimot_series_from_json(const char* json, equimot_series** out);
EQUIMOT_API equimot_status equimot_series_to_json(const equimot_series* s, char** out);
EQUIMOT_API equimot_status equimot_series_to_text(const equimot_series* s, char** out);
EQUIMOT_API int64_t equimot_series_order(const equimot_series* s);
EQUIMOT_API equimot_status equimot_series_coefficient(const equimot_series* s, int64_t n, equimot_element** out);
EQUIMOT_API void equimot_series_destroy(equimot_series* s);

/* Realization tables. equimot_table_p1 builds the genus-0 fixed-point table
 * of the P^1 scaling scenario (q prime, r | q - 1) for the element g of Z/r. */
EQUIMOT_API equimot_status equimot_table_from_json(const char* json, equimot_table** out);
EQUIMOT_API equimot_status equimot_table_p1(int64_t q, int64_t r, int64_t g, equimot_table** out);
EQUIMOT_API equimot_status equimot_table_to_json(const equimot_table* t, char** out);
EQUIMOT_API void equimot_table_destroy(equimot_table* t);
EQUIMOT_API equimot_status equimot_realize(const equimot_element* e, const equimot_table* t, char** decimal);

/* Verification suites: "cross" (divisors, order), "a1" and "p1" (q, r,
 * nmax), "weil" (p, a, b, nmax). Failing checks are reported, not errors;
 * an infeasible enumeration returns EQUIMOT_ERR_TOO_LARGE. */
typedef struct equimot_verify_params {
  const int64_t* divisors;
  size_t divisor_count;
  int64_t order;
  int64_t q;
  int64_t r;
  int64_t p;
  int64_t a;
  int64_t b;
  int64_t nmax;
} equimot_verify_params;

EQUIMOT_API equimot_status equimot_verify(const char* suite, const equimot_verify_params* params,
                                          equimot_report** out);
EQUIMOT_API size_t equimot_report_passed(const equimot_report* report);
EQUIMOT_API size_t equimot_report_failed(const equimot_report* report);
EQUIMOT_API const char* equimot_report_summary(const equimot_report* report);
EQUIMOT_API void equimot_report_destroy(equimot_report* report);

#ifdef __cplusplus
}
#endif

#endif /* EQUIMOT_H */
