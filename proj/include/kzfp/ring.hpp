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

#ifndef KZFP_RING_HPP
#define KZFP_RING_HPP

// Coefficient rings pluggable into SparsePoly.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "kzfp/arith.hpp"
#include "kzfp/dyadic.hpp"

namespace kzfp {

template <class R>
concept CoefficientRing = std::copy_constructible<R> &&
    requires(const R& r, const typename R::value_type& a, const typename R::value_type& b,
             std::int64_t n) {
      { r.zero() } -> std::convertible_to<typename R::value_type>;
      { r.one() } -> std::convertible_to<typename R::value_type>;
      { r.from_int(n) } -> std::convertible_to<typename R::value_type>;
      { r.add(a, b) } -> std::convertible_to<typename R::value_type>;
      { r.sub(a, b) } -> std::convertible_to<typename R::value_type>;
      { r.mul(a, b) } -> std::convertible_to<typename R::value_type>;
      { r.neg(a) } -> std::convertible_to<typename R::value_type>;
      { r.is_zero(a) } -> std::convertible_to<bool>;
      { r.equal(a, b) } -> std::convertible_to<bool>;
      { r.to_string(a) } -> std::convertible_to<std::string>;
      { r == r } -> std::convertible_to<bool>;
    };

/// The prime field F_p; elements are canonical representatives in [0, p-1].
class FpRing {
 public:
  using value_type = FpValue;

  explicit FpRing(std::uint32_t p) : p_(p) {}
  explicit FpRing(const PrimeContext& ctx) : p_(ctx.p()) {}

  std::uint32_t p() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t n) const {
    const auto m = static_cast<std::int64_t>(p_);
    const std::int64_t r = n % m;
    return static_cast<value_type>(r < 0 ? r + m : r);
  }
  value_type add(value_type a, value_type b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::string to_string(value_type a) const { return std::to_string(a); }

  friend bool operator==(const FpRing& a, const FpRing& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// Arbitrary-precision integers.
class IntegerRing {
 public:
  using value_type = mpz_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t n) const { return mpz_class(static_cast<long>(n)); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const { return a.get_str(); }

  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

/// Z[1/2].
class DyadicRing {
 public:
  using value_type = DyadicRational;

  value_type zero() const { return {}; }
  value_type one() const { return DyadicRational(1L); }
  value_type from_int(std::int64_t n) const { return DyadicRational(static_cast<long>(n)); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const { return a.to_string(); }

  friend bool operator==(const DyadicRing&, const DyadicRing&) { return true; }
};

}  // namespace kzfp

#endif  // KZFP_RING_HPP
