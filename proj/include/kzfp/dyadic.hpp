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

#ifndef KZFP_DYADIC_HPP
#define KZFP_DYADIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "kzfp/arith.hpp"

namespace kzfp {

/// Exact element of Z[1/2], stored as num / 2^exp2.
///
/// Canonical form: exp2 == 0, or num is odd. Zero is (0, 0). Every
/// constructor and arithmetic result is brought to canonical form, so two
/// values are equal iff their (num, exp2) pairs are equal.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  explicit DyadicRational(mpz_class num, std::uint64_t exp2 = 0);

  /// Throws InvalidArgument unless the denominator of q is a power of two.
  static DyadicRational from_rational(const mpq_class& q);

  const mpz_class& num() const { return num_; }
  std::uint64_t exp2() const { return exp2_; }
  bool is_zero() const { return num_ == 0; }
  mpq_class to_rational() const;

  DyadicRational operator-() const;
  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b);
  DyadicRational& operator+=(const DyadicRational& o) { return *this = *this + o; }
  DyadicRational& operator*=(const DyadicRational& o) { return *this = *this * o; }

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.exp2_ == b.exp2_ && a.num_ == b.num_;
  }

  /// "num" when exp2 == 0, otherwise "num/2^exp2".
  std::string to_string() const;

 private:
  void canonicalize();

  mpz_class num_;
  std::uint64_t exp2_ = 0;
};

/// num * inv2^exp2 mod p.
FpValue dyadic_mod_p(const DyadicRational& x, const PrimeContext& ctx);

/// binom(-1/2, k), evaluated from the falling-factorial definition with
/// rational arithmetic.
DyadicRational binom_neg_half(std::uint64_t k);

}  // namespace kzfp

#endif  // KZFP_DYADIC_HPP
