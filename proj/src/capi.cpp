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

#include "kzfp/kzfp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "kzfp/report.hpp"

struct kzfp_context {
  kzfp::PrimeContext prime;
  kzfp::TermBudget budget;
};

namespace {

thread_local std::string last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
kzfp_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return KZFP_OK;
  } catch (const kzfp::InvalidArgument& e) {
    last_error = e.what();
    return KZFP_INVALID_ARGUMENT;
  } catch (const kzfp::StructuralError& e) {
    last_error = e.what();
    return KZFP_INVALID_ARGUMENT;
  } catch (const kzfp::ResourceLimit& e) {
    last_error = e.what();
    return KZFP_RESOURCE_LIMIT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return KZFP_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return KZFP_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return KZFP_INTERNAL_ERROR;
  }
}

kzfp_status null_pointer(const char* what) {
  last_error = std::string("null pointer: ") + what;
  return KZFP_NULL_POINTER;
}

}  // namespace

extern "C" {

kzfp_status kzfp_context_create(uint32_t g, uint32_t p, uint64_t max_terms, kzfp_context** out) {
  if (out == nullptr) return null_pointer("out");
  *out = nullptr;
  return guarded([&] {
    kzfp::PrimeContext prime(p, g);
    kzfp::TermBudget budget{max_terms == 0 ? kzfp::kDefaultMaxTerms : static_cast<std::size_t>(max_terms)};
    *out = new kzfp_context{prime, budget};
  });
}

void kzfp_context_destroy(kzfp_context* ctx) { delete ctx; }

kzfp_status kzfp_solve(const kzfp_context* ctx, unsigned jobs, char** json_out, int* all_pass) {
  if (ctx == nullptr) return null_pointer("ctx");
  if (json_out == nullptr) return null_pointer("json_out");
  return guarded([&] {
    const kzfp::Report r = kzfp::solve_report(ctx->prime, ctx->budget, jobs);
    *json_out = copy_string(kzfp::dump(r.json));
    if (all_pass != nullptr) *all_pass = r.pass ? 1 : 0;
  });
}

kzfp_status kzfp_cartier_numeric(const kzfp_context* ctx, const int64_t* lambda, size_t count, char** json_out) {
  if (ctx == nullptr) return null_pointer("ctx");
  if (json_out == nullptr) return null_pointer("json_out");
  if (lambda == nullptr && count > 0) return null_pointer("lambda");
  return guarded([&] {
    const kzfp::Report r = kzfp::cartier_numeric_report(ctx->prime, std::span<const std::int64_t>(lambda, count));
    *json_out = copy_string(kzfp::dump(r.json));
  });
}

kzfp_status kzfp_cartier_symbolic(const kzfp_context* ctx, char** json_out) {
  if (ctx == nullptr) return null_pointer("ctx");
  if (json_out == nullptr) return null_pointer("json_out");
  return guarded([&] { *json_out = copy_string(kzfp::dump(kzfp::cartier_symbolic_report(ctx->prime).json)); });
}

kzfp_status kzfp_verify_decomposition(const kzfp_context* ctx, uint64_t box, unsigned depth, unsigned jobs,
                                      char** json_out, int* all_pass) {
  if (ctx == nullptr) return null_pointer("ctx");
  if (json_out == nullptr) return null_pointer("json_out");
  return guarded([&] {
    const kzfp::Report r = kzfp::decomposition_report(ctx->prime, box, depth, jobs, ctx->budget);
    *json_out = copy_string(kzfp::dump(r.json));
    if (all_pass != nullptr) *all_pass = r.pass ? 1 : 0;
  });
}

kzfp_status kzfp_taylor_slice(const kzfp_context* ctx, uint64_t index, char** json_out) {
  if (ctx == nullptr) return null_pointer("ctx");
  if (json_out == nullptr) return null_pointer("json_out");
  return guarded([&] {
    *json_out = copy_string(kzfp::dump(kzfp::taylor_slice_report(ctx->prime, index, ctx->budget).json));
  });
}

kzfp_status kzfp_taylor_l(const kzfp_context* ctx, const uint64_t* k, size_t count, char** json_out) {
  if (ctx == nullptr) return null_pointer("ctx");
  if (json_out == nullptr) return null_pointer("json_out");
  if (k == nullptr && count > 0) return null_pointer("k");
  return guarded([&] {
    *json_out = copy_string(kzfp::dump(kzfp::taylor_l_report(ctx->prime, std::span<const std::uint64_t>(k, count)).json));
  });
}

void kzfp_string_free(char* s) { std::free(s); }

const char* kzfp_last_error(void) { return last_error.c_str(); }

const char* kzfp_version(void) { return "0.1.0"; }

}  // extern "C"
