// Copyright 2026 The epcodes Authors
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

/* C interface to the epcodes library. Objects are opaque handles released
 * with their *_free function. Every call returns an epc_status; on failure
 * epc_last_error() describes the problem (thread-local, valid until the next
 * call on the same thread). Strings returned through char** are owned by the
 * caller and released with epc_string_free. Rationals are passed as text
 * ("a/b", "a", or a decimal). */

#ifndef EPCODES_EPCODES_H_
#define EPCODES_EPCODES_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EPC_API __declspec(dllexport)
#else
#define EPC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  EPC_OK = 0,
  EPC_ERR_ARGUMENT = 1,     /* bad parameter or unreadable file */
  EPC_ERR_PARSE = 2,        /* malformed hypergraph or code text */
  EPC_ERR_CAP_EXCEEDED = 3, /* instance beyond a configured cap */
  EPC_ERR_INVALID = 4,      /* input violates a precondition (e.g. not a homomorphism) */
  EPC_ERR_INTERNAL = 5
} epc_status;

typedef struct epc_hypergraph epc_hypergraph;
typedef struct epc_code epc_code;

EPC_API const char* epc_version(void);
EPC_API const char* epc_last_error(void);
EPC_API const char* epc_status_name(epc_status status);
EPC_API void epc_string_free(char* s);

/* Hypergraphs. spec is a file path or one of fano-complement, complete:n:k,
 * cycle:n, pg:q:k. */
EPC_API epc_status epc_hypergraph_load(const char* spec, epc_hypergraph** out);
EPC_API epc_status epc_hypergraph_parse(const char* text, epc_hypergraph** out);
EPC_API void epc_hypergraph_free(epc_hypergraph* g);
EPC_API epc_status epc_hypergraph_info(const epc_hypergraph* g, uint32_t* n, uint32_t* k,
                                       uint64_t* edges);
EPC_API epc_status epc_hypergraph_format(const epc_hypergraph* g, char** text);
EPC_API epc_status epc_hypergraph_two_section(const epc_hypergraph* g, epc_hypergraph** out);
/* Strong coloring report. exact != 0 runs branch and bound under budget
 * (0 = default); otherwise greedy. */
EPC_API epc_status epc_hypergraph_color(const epc_hypergraph* g, int exact, uint64_t budget,
                                        char** report);
/* colors has one 0-based entry per vertex. */
EPC_API epc_status epc_hypergraph_validate_coloring(const epc_hypergraph* g, const uint32_t* colors,
                                                    size_t count, int* valid);

/* Codes. spec is a file path or a fixture name. */
EPC_API epc_status epc_code_load(const char* spec, epc_code** out);
EPC_API epc_status epc_code_parse(const char* text, epc_code** out);
EPC_API void epc_code_free(epc_code* c);
EPC_API epc_status epc_code_info(const epc_code* c, uint32_t* q, uint32_t* k, uint32_t* n,
                                 int* linear);
EPC_API epc_status epc_code_format(const epc_code* c, char** text);
EPC_API epc_status epc_code_rs(uint32_t q, uint32_t n, uint32_t k, epc_code** out);
EPC_API epc_status epc_code_pg(uint32_t q, uint32_t k, epc_code** out);
EPC_API epc_status epc_code_average_error(uint32_t p, uint32_t n, epc_code** out);
/* Colors g and composes with base, or with the smallest Reed-Solomon code
 * that fits when base is NULL. report describes the coloring. */
EPC_API epc_status epc_code_compose(const epc_hypergraph* g, const epc_code* base, int exact,
                                    uint64_t budget, epc_code** out, char** report);
/* One line per fixture: name, hypergraph shorthand, epsilon, description. */
EPC_API epc_status epc_fixtures_list(char** report);
/* Fixture details followed by its code file. */
EPC_API epc_status epc_fixture_show(const char* name, char** report);

typedef enum { EPC_VERIFY_EXACT = 0, EPC_VERIFY_EPS = 1, EPC_VERIFY_AVG = 2 } epc_verify_mode;

/* eps is ignored in exact mode. valid receives the verdict; report is the
 * certificate. */
EPC_API epc_status epc_verify(const epc_code* c, const epc_hypergraph* g, epc_verify_mode mode,
                              const char* eps, unsigned jobs, int* valid, char** report);

/* family: Gq, Hq, Hq_cyclic_eps, Hq_eps, Gq_eps.
 * action: enum, cover, color, clique, stats. */
EPC_API epc_status epc_universal_run(uint32_t q, const char* family, const char* action,
                                     uint64_t seed, unsigned jobs, char** report);

/* Smallest alphabet in [2, qmax] for g at per-edge error eps. found receives
 * 1 when a witness exists; witness may be NULL. */
EPC_API epc_status epc_search(const epc_hypergraph* g, const char* eps, uint32_t qmax,
                              uint64_t budget, int* found, char** report, epc_code** witness);

/* Acceptance suite. timings != 0 adds per-criterion runtimes to the report. */
EPC_API epc_status epc_selftest(uint64_t seed, unsigned jobs, int timings, int* all_passed,
                                char** report);

#ifdef __cplusplus
}
#endif

#endif  // EPCODES_EPCODES_H_
