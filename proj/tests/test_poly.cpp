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

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "kzfp/error.hpp"
#include "kzfp/poly.hpp"
#include "kzfp/ring.hpp"

namespace kzfp {
namespace {

template <class R>
R make_ring();
template <>
FpRing make_ring<FpRing>() { return FpRing(7); }
template <>
IntegerRing make_ring<IntegerRing>() { return IntegerRing{}; }
template <>
DyadicRing make_ring<DyadicRing>() { return DyadicRing{}; }

template <class R>
SparsePoly<R> random_poly(const R& ring, std::mt19937_64& rng, std::size_t nvars = 3) {
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<Exponent> ex(0, 3);
  std::uniform_int_distribution<std::int64_t> co(-9, 9);
  std::vector<typename SparsePoly<R>::Term> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m(nvars);
    for (auto& e : m) e = ex(rng);
    terms.push_back({m, ring.from_int(co(rng))});
  }
  return SparsePoly<R>::from_terms(ring, nvars, std::move(terms));
}

template <class R>
class RingAxioms : public ::testing::Test {};

using Rings = ::testing::Types<FpRing, IntegerRing, DyadicRing>;
TYPED_TEST_SUITE(RingAxioms, Rings);

TYPED_TEST(RingAxioms, CommutativeRing) {
  const TypeParam ring = make_ring<TypeParam>();
  std::mt19937_64 rng(2024);
  const auto zero = SparsePoly<TypeParam>(ring, 3);
  const auto one = SparsePoly<TypeParam>::constant(ring, 3, ring.one());
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(ring, rng);
    const auto b = random_poly(ring, rng);
    const auto c = random_poly(ring, rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(-(-a), a);
  }
}

TYPED_TEST(RingAxioms, DerivativeIsADerivation) {
  const TypeParam ring = make_ring<TypeParam>();
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(ring, rng);
    const auto b = random_poly(ring, rng);
    for (std::size_t v = 0; v < 3; ++v) {
      EXPECT_EQ(partial_derivative(a * b, v), partial_derivative(a, v) * b + a * partial_derivative(b, v));
      EXPECT_EQ(partial_derivative(a + b, v), partial_derivative(a, v) + partial_derivative(b, v));
    }
  }
}

TYPED_TEST(RingAxioms, EvaluationIsAHomomorphism) {
  const TypeParam ring = make_ring<TypeParam>();
  std::mt19937_64 rng(5);
  std::vector<typename TypeParam::value_type> point{ring.from_int(2), ring.from_int(-3), ring.from_int(5)};
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(ring, rng);
    const auto b = random_poly(ring, rng);
    const std::span<const typename TypeParam::value_type> pt(point);
    EXPECT_TRUE(ring.equal(evaluate(a * b, pt), ring.mul(evaluate(a, pt), evaluate(b, pt))));
    EXPECT_TRUE(ring.equal(evaluate(a + b, pt), ring.add(evaluate(a, pt), evaluate(b, pt))));
  }
}

TYPED_TEST(RingAxioms, SubstitutionIsAHomomorphism) {
  const TypeParam ring = make_ring<TypeParam>();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(ring, rng);
    const auto b = random_poly(ring, rng);
    const auto r = random_poly(ring, rng);
    EXPECT_EQ(substitute(a * b, 0, r), substitute(a, 0, r) * substitute(b, 0, r));
    EXPECT_EQ(substitute(a + b, 0, r), substitute(a, 0, r) + substitute(b, 0, r));
  }
}

TEST(Poly, ReductionModPCommutesWithProducts) {
  std::mt19937_64 rng(3);
  const IntegerRing zz;
  const FpRing fp(5);
  auto reduce = [&](const IntPoly& f) {
    std::vector<FpPoly::Term> terms;
    for (const auto& t : f.terms()) {
      mpz_class r = t.coeff % 5;
      if (r < 0) r += 5;
      terms.push_back({t.exps, static_cast<FpValue>(r.get_ui())});
    }
    return FpPoly::from_terms(fp, f.nvars(), std::move(terms));
  };
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(zz, rng);
    const auto b = random_poly(zz, rng);
    EXPECT_EQ(reduce(a * b), reduce(a) * reduce(b));
  }
}

TEST(Poly, FrobeniusOverFp) {
  const FpRing fp(5);
  const auto x = FpPoly::variable(fp, 2, 0);
  const auto y = FpPoly::variable(fp, 2, 1);
  EXPECT_EQ(pow(x + y, 5), pow(x, 5) + pow(y, 5));
  EXPECT_TRUE(partial_derivative(pow(x, 5), 0).is_zero());
}

TEST(Poly, Serialization) {
  const FpRing fp(7);
  const auto names = z_names(3);
  const auto z1 = FpPoly::variable(fp, 3, 0);
  const auto z2 = FpPoly::variable(fp, 3, 1);
  const auto z3 = FpPoly::variable(fp, 3, 2);
  const auto f = (z1 * z1 * z3).scaled(3) + z2.scaled(4);
  EXPECT_EQ(to_string(f, names), "4*z2 + 3*z1^2*z3");
  EXPECT_EQ(to_string(FpPoly(fp, 3), names), "0");
  EXPECT_EQ(to_string(z1 + FpPoly::constant(fp, 3, 2), names), "2 + z1");
  EXPECT_EQ(to_string(z1 * z2 + z1 * z3 + z2 * z3 + z1 * z1, names), "z1^2 + z1*z2 + z1*z3 + z2*z3");

  const IntegerRing zz;
  const auto x = IntPoly::variable(zz, 1, 0);
  const std::vector<std::string> xn{"x"};
  EXPECT_EQ(to_string(x - IntPoly::constant(zz, 1, mpz_class(3)), xn), "-3 + x");
  EXPECT_EQ(to_string(-x * x - x, xn), "-x - x^2");
}

TEST(Poly, OrderIsGraded) {
  const FpRing fp(11);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_poly(fp, rng, 4);
    for (std::size_t i = 1; i < f.terms().size(); ++i) {
      EXPECT_TRUE(GradedOrder{}(f.terms()[i - 1].exps, f.terms()[i].exps));
    }
  }
}

TEST(Poly, Homogeneity) {
  const FpRing fp(5);
  const auto x = FpPoly::variable(fp, 2, 0);
  const auto y = FpPoly::variable(fp, 2, 1);
  EXPECT_TRUE(is_homogeneous(x * y + x * x).has_degree(2));
  EXPECT_FALSE(is_homogeneous(x * y + x).homogeneous());
  EXPECT_TRUE(is_homogeneous(FpPoly(fp, 2)).has_degree(17));
}

TEST(Poly, CoefficientsAndEmbedding) {
  const FpRing fp(7);
  const auto t = FpPoly::variable(fp, 2, 0);
  const auto z = FpPoly::variable(fp, 2, 1);
  const auto f = pow(t - z, 3);
  const auto cs = coefficients_in(f, 0);
  ASSERT_EQ(cs.size(), 4u);
  EXPECT_EQ(cs[2], (-z).scaled(3));
  EXPECT_EQ(coeff_of_power(f, 0, 1), (z * z).scaled(3));
  EXPECT_EQ(drop_variable(coeff_of_power(f, 0, 3), 0), FpPoly::constant(fp, 1, 1));
  EXPECT_EQ(inflate_exponents(t * z, 5), pow(t, 5) * pow(z, 5));
  const std::vector<std::size_t> mapping{2, 0};
  const auto g = embed(t * z * z, 3, mapping);
  EXPECT_EQ(g.coeff(Monomial{2, 0, 1}), 1u);
}

TEST(Poly, StructuralErrors) {
  const FpRing fp(7);
  const auto a = FpPoly::variable(fp, 2, 0);
  const auto b = FpPoly::variable(fp, 3, 0);
  EXPECT_THROW(a + b, StructuralError);
  EXPECT_THROW(a * FpPoly::variable(FpRing(5), 2, 0), StructuralError);
  EXPECT_THROW(FpPoly::variable(fp, 2, 2), InvalidArgument);
}

}  // namespace
}  // namespace kzfp
