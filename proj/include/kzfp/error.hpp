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

#ifndef KZFP_ERROR_HPP
#define KZFP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kzfp {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters: non-prime p, p < 2g+1, indices out of range, wrong lengths.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Operands that cannot be combined (variable count or coefficient ring mismatch).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed the configured term ceiling.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// An identity that must hold by construction did not. Never expected.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultMaxTerms = 250000;

/// Ceiling on the number of stored terms in any single polynomial built by the
/// solution pipelines.
class TermBudget {
 public:
  explicit TermBudget(std::size_t max_terms = kDefaultMaxTerms) : max_terms_(max_terms) {}

  std::size_t max_terms() const { return max_terms_; }

  void check(std::size_t terms, const char* what) const {
    if (terms > max_terms_) {
      throw ResourceLimit(std::string(what) + " needs " + std::to_string(terms) +
                          " terms, above the ceiling of " + std::to_string(max_terms_) +
                          " (raise --max-terms to allow it)");
    }
  }

 private:
  std::size_t max_terms_;
};

}  // namespace kzfp

#endif  // KZFP_ERROR_HPP
