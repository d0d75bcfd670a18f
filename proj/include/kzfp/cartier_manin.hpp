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

#ifndef KZFP_CARTIER_MANIN_HPP
#define KZFP_CARTIER_MANIN_HPP

// Cartier-Manin matrices of y^2 = x(x-1)(x-lambda_3)...(x-lambda_{2g+1}).
// Entry (r, s), r = row, s = column, both in [0, g-1], is the coefficient of
// x^{(g-r)p-1} in x^{g-s-1} (x(x-1)prod(x-lambda_i))^{(p-1)/2}.

#include <span>
#include <vector>

#include "kzfp/arith.hpp"
#include "kzfp/error.hpp"
#include "kzfp/poly.hpp"

namespace kzfp {

using FpMatrix = std::vector<std::vector<FpValue>>;
using PolyMatrix = std::vector<std::vector<FpPoly>>;

struct CartierManinNumeric {
  FpMatrix entries;
  /// Some lambda_i is 0 or 1, or two of them coincide. The matrix is still
  /// well defined; the curve is singular.
  bool singular = false;
};

/// Numeric mode; `lambda` holds lambda_3..lambda_{2g+1} (any integers, reduced mod p).
CartierManinNumeric cm_numeric(const PrimeContext& ctx, std::span<const std::int64_t> lambda);

/// Symbolic mode from the explicit sum over Delta^r_s (entries in lambda_3..lambda_{2g+1}).
PolyMatrix cm_symbolic(const PrimeContext& ctx);

/// Symbolic mode by expanding the curve polynomial with lambda as indeterminates.
PolyMatrix cm_symbolic_by_extraction(const PrimeContext& ctx, const TermBudget& budget = TermBudget{});

FpMatrix evaluate_matrix(const PolyMatrix& m, std::span<const FpValue> lambda);

struct CmTerm {
  FpValue coeff = 0;
  Monomial exps;
};

/// A single term C^r_{s; ell}. Accepts 0 <= s <= g (the recursion in the
/// Taylor analysis uses s = m_j up to g). Throws unless ell is in Delta^r_s.
CmTerm cm_term(const PrimeContext& ctx, unsigned r, unsigned s, const Monomial& ell);

/// The same coefficient from the central-binomial (4-power) rewrite.
FpValue cm_term_four_power(const PrimeContext& ctx, unsigned r, unsigned s, const Monomial& ell);

/// Sum of cm_term over Delta^r_s, for any 0 <= r <= g-1, 0 <= s <= g.
FpPoly cm_entry(const PrimeContext& ctx, unsigned r, unsigned s);

}  // namespace kzfp

#endif  // KZFP_CARTIER_MANIN_HPP
