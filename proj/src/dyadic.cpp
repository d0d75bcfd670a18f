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

#include "kzfp/dyadic.hpp"

#include <algorithm>
#include <utility>

#include "kzfp/error.hpp"

namespace kzfp {

DyadicRational::DyadicRational(mpz_class num, std::uint64_t exp2)
    : num_(std::move(num)), exp2_(exp2) {
  canonicalize();
}

void DyadicRational::canonicalize() {
  if (num_ == 0) {
    exp2_ = 0;
    return;
  }
  const std::uint64_t twos = std::min<std::uint64_t>(mpz_scan1(num_.get_mpz_t(), 0), exp2_);
  if (twos > 0) {
    mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), twos);
    exp2_ -= twos;
  }
}

DyadicRational DyadicRational::from_rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  const mpz_class& den = c.get_den();
  const std::uint64_t twos = mpz_scan1(den.get_mpz_t(), 0);
  mpz_class odd;
  mpz_fdiv_q_2exp(odd.get_mpz_t(), den.get_mpz_t(), twos);
  if (odd != 1) throw InvalidArgument("rational is not dyadic: " + c.get_str());
  return DyadicRational(c.get_num(), twos);
}

mpq_class DyadicRational::to_rational() const {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, exp2_);
  mpq_class q(num_, den);
  q.canonicalize();
  return q;
}

DyadicRational DyadicRational::operator-() const {
  DyadicRational r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

mpz_class shifted(const mpz_class& x, std::uint64_t bits) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), bits);
  return r;
}

}  // namespace

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  if (a.exp2_ >= b.exp2_) {
    return DyadicRational(a.num_ + shifted(b.num_, a.exp2_ - b.exp2_), a.exp2_);
  }
  return DyadicRational(shifted(a.num_, b.exp2_ - a.exp2_) + b.num_, b.exp2_);
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) { return a + (-b); }

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
  return DyadicRational(a.num_ * b.num_, a.exp2_ + b.exp2_);
}

std::string DyadicRational::to_string() const {
  if (exp2_ == 0) return num_.get_str();
  return num_.get_str() + "/2^" + std::to_string(exp2_);
}

FpValue dyadic_mod_p(const DyadicRational& x, const PrimeContext& ctx) {
  return ctx.mul(ctx.reduce(x.num()), ctx.pow(ctx.inv2(), x.exp2()));
}

DyadicRational binom_neg_half(std::uint64_t k) {
  mpq_class acc(1);
  for (std::uint64_t i = 0; i < k; ++i) {
    // (-1/2 - i) = -(2i+1)/2
    mpq_class factor{mpz_class(-static_cast<long>(2 * i + 1)), mpz_class(2)};
    acc *= factor;
    acc /= mpz_class(static_cast<unsigned long>(i + 1));
  }
  return DyadicRational::from_rational(acc);
}

}  // namespace kzfp
