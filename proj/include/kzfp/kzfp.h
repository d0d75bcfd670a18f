// Copyright 2026 The kzfp Authors
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

/* C interface to the kzfp library. Every call returns a kzfp_status;
 * strings handed out by the library are released with kzfp_string_free. */

#ifndef KZFP_KZFP_H
#define KZFP_KZFP_H

#include <stddef.h>
#include <stdint.h>

#if defined(KZFP_BUILDING_LIBRARY)
#define KZFP_API __attribute__((visibility("default")))
#else
#define KZFP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kzfp_status {
  KZFP_OK = 0,
  KZFP_INVALID_ARGUMENT = 1,
  KZFP_RESOURCE_LIMIT = 2,
  KZFP_INTERNAL_ERROR = 3,
  KZFP_NULL_POINTER = 4
} kzfp_status;

typedef struct kzfp_context kzfp_context;

/* max_terms = 0 selects the default ceiling. */
KZFP_API kzfp_status kzfp_context_create(uint32_t g, uint32_t p, uint64_t max_terms, kzfp_context** out);
KZFP_API void kzfp_context_destroy(kzfp_context* ctx);

KZFP_API kzfp_status kzfp_solve(const kzfp_context* ctx, unsigned jobs, char** json_out, int* all_pass);

/* lambda holds 2g-1 values. */
KZFP_API kzfp_status kzfp_cartier_numeric(const kzfp_context* ctx, const int64_t* lambda, size_t count,
                                          char** json_out);
KZFP_API kzfp_status kzfp_cartier_symbolic(const kzfp_context* ctx, char** json_out);

KZFP_API kzfp_status kzfp_verify_decomposition(const kzfp_context* ctx, uint64_t box, unsigned depth, unsigned jobs,
                                               char** json_out, int* all_pass);

KZFP_API kzfp_status kzfp_taylor_slice(const kzfp_context* ctx, uint64_t index, char** json_out);

/* k holds 2g-1 nonnegative entries. */
KZFP_API kzfp_status kzfp_taylor_l(const kzfp_context* ctx, const uint64_t* k, size_t count, char** json_out);

KZFP_API void kzfp_string_free(char* s);

/* Message of the last failed call on this thread; empty when none. */
KZFP_API const char* kzfp_last_error(void);

KZFP_API const char* kzfp_version(void);

#ifdef __cplusplus
}
#endif

#endif /* KZFP_KZFP_H */
