/*
Copyright 2026 The posetdim Authors

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

#ifndef POSETDIM_POSETDIM_H_
#define POSETDIM_POSETDIM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PD_API __declspec(dllexport)
#else
#define PD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pd_status {
  PD_OK = 0,
  PD_INVALID_ARGUMENT,
  PD_INDEX_ERROR,
  PD_CYCLE_ERROR,
  PD_RELATION_ERROR,
  PD_SIZE_ERROR,
  PD_BUDGET_EXCEEDED,
  PD_ARITY_MISMATCH,
  PD_NOT_A_REALIZER,
  PD_PRECONDITION_ERROR,
  PD_PARSE_ERROR,
  PD_VERIFICATION_FAILED,
  PD_INTERNAL_ERROR
} pd_status;

typedef struct pd_poset pd_poset;
typedef struct pd_pointset pd_pointset;

/* seconds < 0 and nodes == 0 mean unlimited. jobs == 0 is read as 1. */
typedef struct pd_budget {
  double seconds;
  uint64_t nodes;
  unsigned jobs;
} pd_budget;

PD_API const char* pd_version(void);
PD_API const char* pd_status_name(pd_status s);
/* Message of the last failing call on this thread, "" if none. */
PD_API const char* pd_last_error(void);
/* Frees every char* handed out by this library. */
PD_API void pd_string_free(char* s);

/* ---- posets --------------------------------------------------------- */

/* pairs holds npairs (below, above) index pairs; the closure is taken. */
PD_API pd_status pd_poset_from_relations(size_t n, const size_t* pairs, size_t npairs, pd_poset** out);
PD_API pd_status pd_poset_from_json(const char* text, pd_poset** out);
/* kind: "chain" (n), "antichain" (n), "grid" (n, d), "standard-example"
   (n = m), "c-r" (n = r), "spider". Unused parameters are ignored. */
PD_API pd_status pd_poset_construct(const char* kind, int n, int d, pd_poset** out);
/* Lexicographic product: p's order first, q's inside each p-element. */
PD_API pd_status pd_poset_lex_product(const pd_poset* p, const pd_poset* q, pd_poset** out);
PD_API void pd_poset_free(pd_poset* p);

PD_API size_t pd_poset_size(const pd_poset* p);
PD_API pd_status pd_poset_less(const pd_poset* p, size_t i, size_t j, int* out);
PD_API pd_status pd_poset_isomorphic(const pd_poset* p, const pd_poset* q, int* out);
PD_API pd_status pd_poset_to_json(const pd_poset* p, char** out);
PD_API pd_status pd_poset_to_dot(const pd_poset* p, char** out);

/* ---- dimension ------------------------------------------------------ */

/* {"dimension", "realizer", "certified", "verified"} */
PD_API pd_status pd_dimension(const pd_poset* p, const pd_budget* budget, char** report);
/* {"d", "realizable", "realizer", "verified"}; realizer is null when none. */
PD_API pd_status pd_dimension_at_most(const pd_poset* p, int d, const pd_budget* budget, char** report);

/* ---- extremal ------------------------------------------------------- */

/* {"d", "n", "size", "members", "optimal", "verified"}. On budget
   exhaustion the report holds the best found and the call returns
   PD_BUDGET_EXCEEDED. */
PD_API pd_status pd_max_subposet(const pd_poset* p, int d, const pd_budget* budget, char** report);

/* coords holds count (x, y, z) triples in [r]^3. */
PD_API pd_status pd_extract_spider(const int* coords, size_t count, int r, const pd_budget* budget,
                                   char** report);
/* sampler: "uniform" or "adversarial". */
PD_API pd_status pd_extract_spider_sampled(int r, size_t samples, uint64_t seed, const char* sampler,
                                           const pd_budget* budget, char** report);
/* Rows for 1..n and a monotonicity check. */
PD_API pd_status pd_f_value(size_t n, int d, const pd_budget* budget, char** report);
PD_API pd_status pd_grid_probe(int n, int d, const pd_budget* budget, char** report);

/* ---- patterns ------------------------------------------------------- */

PD_API pd_status pd_pointset_from_json(const char* text, pd_pointset** out);
/* "identity2", or "standard-permutation" built from a realizer of S_{d+1}. */
PD_API pd_status pd_pointset_builtin(const char* name, int d, pd_pointset** out);
PD_API void pd_pointset_free(pd_pointset* a);
PD_API pd_status pd_pointset_to_json(const pd_pointset* a, char** out);

/* {"contains", "witness", "verified"}; witness is the d maps or null. */
PD_API pd_status pd_contains(const pd_pointset* host, const pd_pointset* pattern, char** report);
/* {"n", "d", "size", "witness", "optimal", "verified"} */
PD_API pd_status pd_max_avoid(int n, int d, const pd_pointset* pattern, const pd_budget* budget,
                              char** report);

/* ---- acceptance ----------------------------------------------------- */

typedef struct pd_verify_options {
  double budget_seconds; /* <= 0 skips the long checks */
  unsigned jobs;
  uint64_t seed;
  int corrupt_c_r; /* negative control */
} pd_verify_options;

typedef void (*pd_verify_callback)(const char* id, const char* title, const char* status,
                                   const char* detail, double seconds, void* user);

/* PD_OK if every check passed, PD_VERIFICATION_FAILED if any failed,
   otherwise PD_BUDGET_EXCEEDED when some were skipped. The report omits
   timings. */
PD_API pd_status pd_verify_all(const pd_verify_options* options, pd_verify_callback callback, void* user,
                               char** report);

#ifdef __cplusplus
}
#endif

#endif  // POSETDIM_POSETDIM_H_
