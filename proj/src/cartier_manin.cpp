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

#include "kzfp/cartier_manin.hpp"

#include <set>
#include <string>

#include "kzfp/fp_solutions.hpp"

namespace kzfp {

namespace {

std::uint64_t extraction_index(const PrimeContext& ctx, unsigned r) {
  return std::uint64_t{ctx.g() - r} * ctx.p() - 1;
}

}  // namespace

CartierManinNumeric cm_numeric(const PrimeContext& ctx, std::span<const std::int64_t> lambda) {
  const unsigned g = ctx.g();
  if (lambda.size() != 2 * g - 1) {
    throw InvalidArgument("numeric Cartier-Manin matrix needs 2g-1 = " + std::to_string(2 * g - 1) +
                          " lambda values (got " + std::to_string(lambda.size()) + ")");
  }
  const FpRing ring(ctx);
  std::vector<FpValue> lam;
  for (std::int64_t v : lambda) lam.push_back(ctx.reduce(v));

  CartierManinNumeric out;
  std::set<FpValue> roots{0, 1};
  for (FpValue v : lam) {
    if (!roots.insert(v).second) out.singular = true;
  }

  const FpPoly x = FpPoly::variable(ring, 1, 0);
  FpPoly curve = x * (x - FpPoly::constant(ring, 1, 1));
  for (FpValue v : lam) curve *= x - FpPoly::constant(ring, 1, v);
  const FpPoly base = pow(curve, ctx.half());

  out.entries.assign(g, std::vector<FpValue>(g, 0));
  for (unsigned s = 0; s < g; ++s) {
    const FpPoly q = FpPoly::monomial(ring, 1, Monomial{g - s - 1}, 1) * base;
    for (unsigned r = 0; r < g; ++r) {
      out.entries[r][s] = q.coeff(Monomial{static_cast<Exponent>(extraction_index(ctx, r))});
    }
  }
  return out;
}

CmTerm cm_term(const PrimeContext& ctx, unsigned r, unsigned s, const Monomial& ell) {
  if (r >= ctx.g() || s > ctx.g()) throw InvalidArgument("cm_term needs 0 <= r <= g-1, 0 <= s <= g");
  if (!in_delta(ctx, r, s, ell)) throw InvalidArgument("cm_term: tuple is not in Delta^r_s");
  std::int64_t sum = 0;
  for (Exponent e : ell) sum += e;
  const std::int64_t shift = sum + s - std::int64_t{r} * ctx.p();
  FpValue c = ctx.sign(std::int64_t{ctx.half()} + std::int64_t{r} * ctx.p() - s);
  c = ctx.mul(c, binom_half_mod_p(static_cast<std::uint64_t>(shift), ctx));
  for (Exponent e : ell) c = ctx.mul(c, binom_half_mod_p(e, ctx));
  return {c, ell};
}

FpValue cm_term_four_power(const PrimeContext& ctx, unsigned r, unsigned s, const Monomial& ell) {
  if (r >= ctx.g() || s > ctx.g()) throw InvalidArgument("cm_term needs 0 <= r <= g-1, 0 <= s <= g");
  if (!in_delta(ctx, r, s, ell)) throw InvalidArgument("cm_term: tuple is not in Delta^r_s");
  std::int64_t sum = 0;
  for (Exponent e : ell) sum += e;
  const std::int64_t shift = sum + s - std::int64_t{r} * ctx.p();
  FpValue c = ctx.sign(ctx.half());
  c = ctx.mul(c, ctx.pow_signed(4, -2 * sum - std::int64_t{s} + std::int64_t{r} * ctx.p()));
  c = ctx.mul(c, central_binom_mod_p(static_cast<std::uint64_t>(shift), ctx));
  for (Exponent e : ell) c = ctx.mul(c, central_binom_mod_p(e, ctx));
  return c;
}

FpPoly cm_entry(const PrimeContext& ctx, unsigned r, unsigned s) {
  std::vector<FpPoly::Term> terms;
  for (const Monomial& ell : delta_set(ctx, r, s).tuples) {
    CmTerm t = cm_term(ctx, r, s, ell);
    terms.push_back({std::move(t.exps), t.coeff});
  }
  return FpPoly::from_terms(FpRing(ctx), 2 * ctx.g() - 1, std::move(terms));
}

PolyMatrix cm_symbolic(const PrimeContext& ctx) {
  const unsigned g = ctx.g();
  PolyMatrix out(g);
  for (unsigned r = 0; r < g; ++r) {
    for (unsigned s = 0; s < g; ++s) out[r].push_back(cm_entry(ctx, r, s));
  }
  return out;
}

PolyMatrix cm_symbolic_by_extraction(const PrimeContext& ctx, const TermBudget& budget) {
  const unsigned g = ctx.g();
  const FpRing ring(ctx);
  // x at index 0, lambda_{i} at index i-2.
  const std::size_t nv = 2 * g;
  const FpPoly x = FpPoly::variable(ring, nv, 0);
  FpPoly curve = x * (x - FpPoly::constant(ring, nv, 1));
  for (std::size_t i = 1; i < nv; ++i) curve *= x - FpPoly::variable(ring, nv, i);
  const FpPoly base = pow(curve, ctx.half());
  budget.check(base.size(), "curve polynomial power");

  PolyMatrix out(g, std::vector<FpPoly>(g, FpPoly(ring, nv - 1)));
  for (unsigned s = 0; s < g; ++s) {
    Monomial shift(nv, 0);
    shift[0] = g - s - 1;
    const FpPoly q = FpPoly::monomial(ring, nv, shift, 1) * base;
    for (unsigned r = 0; r < g; ++r) {
      out[r][s] = drop_variable(coeff_of_power(q, 0, static_cast<Exponent>(extraction_index(ctx, r))), 0);
    }
  }
  return out;
}

FpMatrix evaluate_matrix(const PolyMatrix& m, std::span<const FpValue> lambda) {
  FpMatrix out;
  for (const auto& row : m) {
    std::vector<FpValue> vals;
    for (const FpPoly& f : row) vals.push_back(evaluate(f, lambda));
    out.push_back(std::move(vals));
  }
  return out;
}

}  // namespace kzfp
