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

#ifndef KZFP_FP_SOLUTIONS_HPP
#define KZFP_FP_SOLUTIONS_HPP

// Polynomial solutions of the hyperelliptic KZ system over F_p.
//
// Variable layout used throughout:
//   z-polynomials         z_1..z_{2g+1} at indices 0..2g
//   (t, z)-polynomials    t at index 0, z_a at index a
//   lambda-polynomials    lambda_3..lambda_{2g+1} at indices 0..2g-2

#include <cstdint>
#include <mutex>
#include <vector>

#include "kzfp/arith.hpp"
#include "kzfp/error.hpp"
#include "kzfp/poly.hpp"

namespace kzfp {

/// Tuples (l_3..l_{2g+1}) with l_i <= (p-1)/2 and 0 <= sum + s - rp <= (p-1)/2.
struct DeltaSet {
  unsigned r = 0;
  unsigned s = 0;
  std::vector<Monomial> tuples;
};

/// Enumerates the set for 0 <= r <= g-1, 0 <= s <= g.
DeltaSet delta_set(const PrimeContext& ctx, unsigned r, unsigned s);

/// Membership test with no range restriction on r, s.
bool in_delta(const PrimeContext& ctx, std::uint64_t r, std::uint64_t s, const Monomial& ell);

/// Highest t-power in the P-vector: (p-1)/2 + gp - g - 1.
std::uint64_t taylor_degree_bound(const PrimeContext& ctx);

/// Common degree (p-1)/2 + mp - g of the coordinates of I^m, J^m.
std::uint64_t solution_degree(const PrimeContext& ctx, unsigned m);

/// Product of (t - z_a)^{(p-1)/2} over all points, in (t, z).
FpPoly master_polynomial(const PrimeContext& ctx, const TermBudget& budget = TermBudget{});

/// P_j = (t - z_j)^{(p-3)/2} prod_{a != j} (t - z_a)^{(p-1)/2}.
FpVector p_vector(const PrimeContext& ctx, const TermBudget& budget = TermBudget{});

/// Coefficient vector of the term K^m_ell (monomial lambda^ell omitted).
std::vector<FpValue> k_term(const PrimeContext& ctx, unsigned m, const Monomial& ell);

/// Same term from the central-binomial (4-power) form; must agree with k_term.
std::vector<FpValue> k_term_four_power(const PrimeContext& ctx, unsigned m, const Monomial& ell);

/// K^m(lambda) = sum over Delta^m_g of lambda^ell k_term(m, ell); with
/// four_power set, the terms come from k_term_four_power instead.
FpVector solution_K(const PrimeContext& ctx, unsigned m, bool four_power = false);

/// Pulls a lambda-vector back to z: each monomial lambda^ell of degree d becomes
/// prod_j (z_j - z_1)^{ell_j} * (z_2 - z_1)^{degree - d}. Throws
/// InternalInconsistency if some monomial has degree above `degree`.
FpVector homogenize_lambda(const PrimeContext& ctx, const FpVector& lambda_vec, std::uint64_t degree,
                           const TermBudget& budget = TermBudget{});

/// Builds and caches the master polynomial and P-vector of one (g, p) and
/// derives every solution family from them. Thread-safe after construction.
class FpSolutions {
 public:
  explicit FpSolutions(const PrimeContext& ctx, TermBudget budget = TermBudget{});

  const PrimeContext& context() const { return ctx_; }
  const TermBudget& budget() const { return budget_; }

  const FpPoly& master_polynomial() const { return master_; }
  const FpVector& p_vector() const { return p_; }

  /// P^i(z), 0 <= i <= taylor_degree_bound.
  FpVector taylor_slice(std::uint64_t i) const;
  /// Coefficient of t^i in P(t + z_1, z).
  FpVector shifted_slice(std::uint64_t i) const;

  /// I^m = P^{(g-m)p-1}.
  FpVector solution_I(unsigned m) const;
  /// J^m = sum_l I^{m-l} z_1^{lp} binom(g-m-1+l, g-m-1).
  FpVector solution_J(unsigned m) const;
  /// J^m by extraction from the shifted P-vector.
  FpVector solution_J_shifted(unsigned m) const;
  /// K^m(lambda) as the sum of k_term over Delta^m_g.
  FpVector solution_K(unsigned m) const;
  FpVector solution_K_four_power(unsigned m) const;

 private:
  void check_m(unsigned m) const;
  const FpVector& shifted_p_vector() const;

  PrimeContext ctx_;
  TermBudget budget_;
  FpPoly master_;
  FpVector p_;
  mutable std::once_flag shifted_once_;
  mutable FpVector shifted_;
};

}  // namespace kzfp

#endif  // KZFP_FP_SOLUTIONS_HPP
