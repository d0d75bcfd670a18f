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

#ifndef KZFP_ARITH_HPP
#define KZFP_ARITH_HPP

// Integer, modular and binomial arithmetic. Elements of F_p are plain
// canonical representatives in [0, p-1]; binomials that may overflow are
// computed with GMP or digit-wise through Lucas.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace kzfp {

using FpValue = std::uint32_t;

bool is_prime(std::uint64_t n);

/// An odd prime p together with the genus g of the curves under study.
/// Construction enforces p prime, p odd and p >= 2g+1.
class PrimeContext {
 public:
  PrimeContext(std::uint32_t p, unsigned g);

  std::uint32_t p() const { return p_; }
  unsigned g() const { return g_; }
  /// Number of marked points 2g+1 (length of every solution vector).
  unsigned points() const { return 2 * g_ + 1; }
  /// (p-1)/2, the exponent of the master polynomial.
  unsigned half() const { return (p_ - 1) / 2; }
  FpValue inv2() const { return inv2_; }

  FpValue reduce(std::int64_t x) const {
    const auto m = static_cast<std::int64_t>(p_);
    const std::int64_t r = x % m;
    return static_cast<FpValue>(r < 0 ? r + m : r);
  }
  FpValue reduce(const mpz_class& x) const;

  FpValue add(FpValue a, FpValue b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<FpValue>(s >= p_ ? s - p_ : s);
  }
  FpValue sub(FpValue a, FpValue b) const { return a >= b ? a - b : a + p_ - b; }
  FpValue neg(FpValue a) const { return a == 0 ? 0 : p_ - a; }
  FpValue mul(FpValue a, FpValue b) const {
    return static_cast<FpValue>(std::uint64_t{a} * b % p_);
  }
  FpValue pow(FpValue base, std::uint64_t e) const;
  /// base^e for a possibly negative exponent; base must be nonzero when e < 0.
  FpValue pow_signed(FpValue base, std::int64_t e) const;
  FpValue inv(FpValue a) const;
  /// (-1)^e.
  FpValue sign(std::int64_t e) const { return (e % 2 == 0) ? 1 : p_ - 1; }

 private:
  std::uint32_t p_;
  unsigned g_;
  FpValue inv2_;
};

/// Exact binomial coefficient; zero when k < 0 or k > n.
mpz_class binom_exact(std::uint64_t n, std::int64_t k);

/// Base-p digits, least significant first. Zero yields {0}.
std::vector<std::uint32_t> base_p_digits(std::uint64_t n, std::uint32_t p);

/// binom(m, n) mod p via Lucas's theorem (a digit with m_i < n_i gives 0).
FpValue lucas_binom(std::uint64_t m, std::uint64_t n, const PrimeContext& ctx);

/// True iff binom(2a, a) is a unit mod p, i.e. every base-p digit of a is at
/// most (p-1)/2.
bool central_binom_nonzero(std::uint64_t a, const PrimeContext& ctx);

/// binom((p-1)/2, k) mod p for 0 <= k <= p-1.
FpValue binom_half_mod_p(std::uint64_t k, const PrimeContext& ctx);

/// binom(2k, k) mod p.
inline FpValue central_binom_mod_p(std::uint64_t k, const PrimeContext& ctx) {
  return lucas_binom(2 * k, k, ctx);
}

}  // namespace kzfp

#endif  // KZFP_ARITH_HPP
