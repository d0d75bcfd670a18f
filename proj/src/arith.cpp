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

#include "kzfp/arith.hpp"

#include <string>

#include "kzfp/error.hpp"

namespace kzfp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeContext::PrimeContext(std::uint32_t p, unsigned g) : p_(p), g_(g), inv2_(0) {
  if (g == 0) throw InvalidArgument("genus g must be positive");
  if (p > 0x7fffffffu || p % 2 == 0 || !is_prime(p) || p < 2 * std::uint64_t{g} + 1) {
    throw InvalidArgument("p must be an odd prime >= 2g+1 (got p=" + std::to_string(p) +
                          ", g=" + std::to_string(g) + ")");
  }
  inv2_ = (p + 1) / 2;
}

FpValue PrimeContext::reduce(const mpz_class& x) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p_);
  return static_cast<FpValue>(r.get_ui());
}

FpValue PrimeContext::pow(FpValue base, std::uint64_t e) const {
  std::uint64_t result = 1 % p_;
  std::uint64_t b = base % p_;
  while (e > 0) {
    if (e & 1u) result = result * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<FpValue>(result);
}

FpValue PrimeContext::inv(FpValue a) const {
  if (a % p_ == 0) throw InvalidArgument("zero has no inverse mod p");
  return pow(a, p_ - 2);
}

FpValue PrimeContext::pow_signed(FpValue base, std::int64_t e) const {
  if (e >= 0) return pow(base, static_cast<std::uint64_t>(e));
  return pow(inv(base), static_cast<std::uint64_t>(-e));
}

mpz_class binom_exact(std::uint64_t n, std::int64_t k) {
  mpz_class r;
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

std::vector<std::uint32_t> base_p_digits(std::uint64_t n, std::uint32_t p) {
  if (p < 2) throw InvalidArgument("digit base must be at least 2");
  std::vector<std::uint32_t> digits;
  do {
    digits.push_back(static_cast<std::uint32_t>(n % p));
    n /= p;
  } while (n > 0);
  return digits;
}

namespace {

// binom(m, n) mod p for 0 <= n <= m < p, by the multiplicative formula.
FpValue small_binom(std::uint32_t m, std::uint32_t n, const PrimeContext& ctx) {
  if (n > m) return 0;
  if (n > m - n) n = m - n;
  FpValue num = 1;
  FpValue den = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    num = ctx.mul(num, m - i);
    den = ctx.mul(den, i + 1);
  }
  return ctx.mul(num, ctx.inv(den));
}

}  // namespace

FpValue lucas_binom(std::uint64_t m, std::uint64_t n, const PrimeContext& ctx) {
  if (n > m) return 0;
  const std::uint32_t p = ctx.p();
  FpValue result = 1;
  while (n > 0) {
    const auto mi = static_cast<std::uint32_t>(m % p);
    const auto ni = static_cast<std::uint32_t>(n % p);
    if (ni > mi) return 0;
    result = ctx.mul(result, small_binom(mi, ni, ctx));
    m /= p;
    n /= p;
  }
  return result;
}

bool central_binom_nonzero(std::uint64_t a, const PrimeContext& ctx) {
  for (std::uint32_t d : base_p_digits(a, ctx.p())) {
    if (d > ctx.half()) return false;
  }
  return true;
}

FpValue binom_half_mod_p(std::uint64_t k, const PrimeContext& ctx) {
  if (k > ctx.p() - 1) {
    throw InvalidArgument("binom_half_mod_p: k must lie in [0, p-1]");
  }
  return small_binom(ctx.half(), static_cast<std::uint32_t>(k), ctx);
}

}  // namespace kzfp
