/* Copyright 2026 The treematch Authors
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

/* C interface to libtreematch.
 *
 * Every call returns a tm_status. On failure the message is available from
 * tm_last_error() on the calling thread until the next failing call.
 * Strings handed out through char** parameters are owned by the caller and
 * released with tm_free_string. Exact counts travel as decimal strings.
 */
#ifndef TREEMATCH_TREEMATCH_H_
#define TREEMATCH_TREEMATCH_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TM_API __declspec(dllexport)
#else
#define TM_API __attribute__((visibility("default")))
#endif

typedef enum tm_status {
  TM_OK = 0,
  TM_NOT_A_TREE = 1,
  TM_BAD_FAMILY_PARAMS = 2,
  TM_ORDER_TOO_LARGE = 3,
  TM_TOO_LARGE_FOR_ORACLE = 4,
  TM_ORDER_TOO_SMALL = 5,
  TM_TOO_LARGE_FOR_SYMBOLIC = 6,
  TM_NON_POSITIVE_PARAMETER = 7,
  TM_MIXED_KINDS = 8,
  TM_ODD_ORDER = 9,
  TM_PARITY_MISMATCH = 10,
  TM_INFEASIBLE_PARITY = 11,
  TM_PARSE_ERROR = 12,
  TM_INVALID_ARGUMENT = 13,
  TM_NULL_ARGUMENT = 64,
  TM_INTERNAL = 65
} tm_status;

typedef struct tm_tree tm_tree;
typedef struct tm_stream tm_stream;

TM_API const char* tm_version(void);
TM_API const char* tm_status_name(tm_status status);
TM_API const char* tm_last_error(void);
TM_API void tm_free_string(char* s);

/* Trees. */
TM_API tm_status tm_tree_parse(const char* edge_list, tm_tree** out);
/* endpoints holds 2*(n-1) vertex ids, one edge per pair. */
TM_API tm_status tm_tree_from_edges(int n, const int* endpoints,
                                    tm_tree** out);
/* Family text such as "spider:9", "st:3,2,0" or "subdiv:path:4". */
TM_API tm_status tm_tree_family(const char* spec, tm_tree** out);
TM_API void tm_tree_free(tm_tree* tree);
TM_API int tm_tree_order(const tm_tree* tree);
TM_API tm_status tm_tree_edge_list(const tm_tree* tree, char** out);
TM_API tm_status tm_tree_canonical(const tm_tree* tree, char** out);
TM_API tm_status tm_tree_isomorphic(const tm_tree* a, const tm_tree* b,
                                    int* out);
TM_API tm_status tm_tree_diameter(const tm_tree* tree, int* out);

/* Statistics. selector is one of apm, sapm, pm-sapm, ksapm:K, maximal, mk:K,
 * hosoya, phi1..phi4, phiL:c=V, golden16, table:@file. */
TM_API tm_status tm_count(const tm_tree* tree, const char* selector,
                          char** out);
/* JSON array of decimal strings, m_0 first. */
TM_API tm_status tm_matching_profile(const tm_tree* tree, char** out);

/* Enumeration of free trees of order n, one per isomorphism class.
 * max_order <= 0 selects the default cap. */
TM_API tm_status tm_stream_open(int n, int max_order, tm_stream** out);
/* *out is NULL once the stream is exhausted. */
TM_API tm_status tm_stream_next(tm_stream* stream, tm_tree** out);
TM_API void tm_stream_free(tm_stream* stream);
TM_API tm_status tm_count_free_trees(int n, int max_order, int64_t* out);

/* Reports, as JSON text. */
TM_API tm_status tm_scan(int n, const char* selector, int maximize,
                         int threads, int max_order, int include_meta,
                         char** out_json);
/* theorems: comma-separated check names; NULL, "" or "all" runs every check.
 * *all_pass (optional) receives 1 when every row passes. */
TM_API tm_status tm_verify(int n_max, const char* theorems, int threads,
                           int max_order, int include_meta, char** out_json,
                           int* all_pass);
/* JSON array of check names accepted by tm_verify. */
TM_API tm_status tm_theorem_names(char** out_json);

typedef struct tm_optimize_options {
  int m;
  int k;
  int total_legs; /* 0: number of free variables */
  int symmetric;
  int integer_mode;
  uint64_t seed;
  int starts;
} tm_optimize_options;

TM_API void tm_optimize_defaults(tm_optimize_options* options);
TM_API tm_status tm_optimize(const tm_optimize_options* options,
                             char** out_json);
/* Chain count for leg profile legs[0..m-1], as a decimal string. */
TM_API tm_status tm_chain_count(const int* legs, int m, int k, char** out);
TM_API tm_status tm_growth_check(int k, const int* orders, int count,
                                 char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* TREEMATCH_TREEMATCH_H_ */
