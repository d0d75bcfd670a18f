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

#include "kzfp/fp_solutions.hpp"

#include <string>

namespace kzfp {

namespace {

// Odometer over [0, bound]^dim.
bool next_tuple(Monomial& t, Exponent bound) {
  for (auto& e : t) {
    if (e < bound) {
      ++e;
      return true;
    }
    e = 0;
  }
  return false;
}

FpPoly linear_form(const FpRing& ring, std::size_t nvars, std::size_t plus, std::size_t minus) {
  return FpPoly::variable(ring, nvars, plus) - FpPoly::variable(ring, nvars, minus);
}

std::uint64_t checked_power(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > (std::uint64_t{1} << 40)) return r;
    r *= base;
  }
  return r;
}

}  // namespace

DeltaSet delta_set(const PrimeContext& ctx, unsigned r, unsigned s) {
  if (r >= ctx.g() || s > ctx.g()) {
    throw InvalidArgument("delta_set needs 0 <= r <= g-1 and 0 <= s <= g (got r=" + std::to_string(r) +
                          ", s=" + std::to_string(s) + ")");
  }
  DeltaSet out{r, s, {}};
  Monomial ell(2 * ctx.g() - 1, 0);
  do {
    if (in_delta(ctx, r, s, ell)) out.tuples.push_back(ell);
  } while (next_tuple(ell, ctx.half()));
  return out;
}

bool in_delta(const PrimeContext& ctx, std::uint64_t r, std::uint64_t s, const Monomial& ell) {
  if (ell.size() != 2 * ctx.g() - 1) return false;
  std::int64_t sum = 0;
  for (Exponent e : ell) {
    if (e > ctx.half()) return false;
    sum += e;
  }
  const std::int64_t shifted = sum + static_cast<std::int64_t>(s) - static_cast<std::int64_t>(r * ctx.p());
  return shifted >= 0 && shifted <= static_cast<std::int64_t>(ctx.half());
}

std::uint64_t taylor_degree_bound(const PrimeContext& ctx) {
  return ctx.half() + std::uint64_t{ctx.g()} * ctx.p() - ctx.g() - 1;
}

std::uint64_t solution_degree(const PrimeContext& ctx, unsigned m) {
  return ctx.half() + std::uint64_t{m} * ctx.p() - ctx.g();
}

FpPoly master_polynomial(const PrimeContext& ctx, const TermBudget& budget) {
  const unsigned n = ctx.points();
  budget.check(checked_power(ctx.half() + 1, n), "master polynomial");
  const FpRing ring(ctx);
  auto phi = FpPoly::constant(ring, n + 1, 1);
  for (unsigned a = 1; a <= n; ++a) phi = phi * pow(linear_form(ring, n + 1, 0, a), ctx.half());
  return phi;
}

FpVector p_vector(const PrimeContext& ctx, const TermBudget& budget) {
  const unsigned n = ctx.points();
  budget.check(checked_power(ctx.half() + 1, n), "P-vector");
  const FpRing ring(ctx);
  std::vector<FpPoly> full;
  for (unsigned a = 1; a <= n; ++a) full.push_back(pow(linear_form(ring, n + 1, 0, a), ctx.half()));
  // prefix[j] = full[0]..full[j-1], suffix[j] = full[j]..full[n-1]
  std::vector<FpPoly> prefix{FpPoly::constant(ring, n + 1, 1)};
  for (unsigned a = 0; a < n; ++a) prefix.push_back(prefix.back() * full[a]);
  std::vector<FpPoly> suffix(n + 1, FpPoly::constant(ring, n + 1, 1));
  for (unsigned a = n; a-- > 0;) suffix[a] = full[a] * suffix[a + 1];
  FpVector p;
  for (unsigned j = 0; j < n; ++j) {
    FpPoly reduced = pow(linear_form(ring, n + 1, 0, j + 1), ctx.half() - 1);
    p.push_back(reduced * prefix[j] * suffix[j + 1]);
    budget.check(p.back().size(), "P-vector coordinate");
  }
  return p;
}

std::vector<FpValue> k_term(const PrimeContext& ctx, unsigned m, const Monomial& ell) {
  if (!in_delta(ctx, m, ctx.g(), ell)) throw InvalidArgument("k_term: tuple is not in Delta^m_g");
  std::int64_t sum = 0;
  for (Exponent e : ell) sum += e;
  const std::int64_t shift = sum + ctx.g() - std::int64_t{m} * ctx.p();
  FpValue c = ctx.sign(static_cast<std::int64_t>(solution_degree(ctx, m)));
  c = ctx.mul(c, binom_half_mod_p(static_cast<std::uint64_t>(shift), ctx));
  for (Exponent e : ell) c = ctx.mul(c, binom_half_mod_p(e, ctx));
  std::vector<FpValue> v;
  v.push_back(c);
  v.push_back(ctx.mul(c, ctx.reduce(-2 * sum - 2 * std::int64_t{ctx.g()})));
  for (Exponent e : ell) v.push_back(ctx.mul(c, ctx.reduce(2 * std::int64_t{e} + 1)));
  return v;
}

std::vector<FpValue> k_term_four_power(const PrimeContext& ctx, unsigned m, const Monomial& ell) {
  if (!in_delta(ctx, m, ctx.g(), ell)) throw InvalidArgument("k_term: tuple is not in Delta^m_g");
  std::int64_t sum = 0;
  for (Exponent e : ell) sum += e;
  const std::int64_t shift = sum + ctx.g() - std::int64_t{m} * ctx.p();
  FpValue c = ctx.sign(ctx.half());
  c = ctx.mul(c, ctx.pow_signed(4, -2 * sum - std::int64_t{ctx.g()} + std::int64_t{m} * ctx.p()));
  c = ctx.mul(c, central_binom_mod_p(static_cast<std::uint64_t>(shift), ctx));
  for (Exponent e : ell) c = ctx.mul(c, central_binom_mod_p(e, ctx));
  std::vector<FpValue> v;
  v.push_back(c);
  v.push_back(ctx.mul(c, ctx.reduce(-2 * sum - 2 * std::int64_t{ctx.g()})));
  for (Exponent e : ell) v.push_back(ctx.mul(c, ctx.reduce(2 * std::int64_t{e} + 1)));
  return v;
}

FpVector homogenize_lambda(const PrimeContext& ctx, const FpVector& lambda_vec, std::uint64_t degree,
                           const TermBudget& budget) {
  const unsigned n = ctx.points();
  const FpRing ring(ctx);
  // powers[j][e] = (z_{j+2} - z_1)^e for j = 0..n-2; j = 0 is the (z_2 - z_1) factor.
  std::vector<std::vector<FpPoly>> powers(n - 1);
  auto power_of = [&](unsigned j, std::uint64_t e) -> const FpPoly& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(FpPoly::constant(ring, n, 1));
    const FpPoly base = linear_form(ring, n, j + 1, 0);
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };

  FpVector out;
  out.reserve(lambda_vec.size());
  for (const FpPoly& f : lambda_vec) {
    if (f.nvars() != n - 2) throw StructuralError("homogenize_lambda expects lambda_3..lambda_{2g+1}");
    FpPoly acc(ring, n);
    for (const auto& t : f.terms()) {
      const std::uint64_t d = total_degree(t.exps);
      if (d > degree) {
        throw InternalInconsistency("lambda monomial of degree " + std::to_string(d) +
                                    " exceeds homogenization degree " + std::to_string(degree));
      }
      FpPoly term = power_of(0, degree - d).scaled(t.coeff);
      for (std::size_t i = 0; i < t.exps.size(); ++i) {
        if (t.exps[i] != 0) term = term * power_of(static_cast<unsigned>(i + 1), t.exps[i]);
      }
      acc += term;
    }
    budget.check(acc.size(), "homogenized vector coordinate");
    out.push_back(std::move(acc));
  }
  return out;
}

FpSolutions::FpSolutions(const PrimeContext& ctx, TermBudget budget)
    : ctx_(ctx),
      budget_(budget),
      master_(kzfp::master_polynomial(ctx, budget)),
      p_(kzfp::p_vector(ctx, budget)) {}

void FpSolutions::check_m(unsigned m) const {
  if (m >= ctx_.g()) {
    throw InvalidArgument("solution index m must lie in [0, g-1] (got " + std::to_string(m) + ")");
  }
}

FpVector FpSolutions::taylor_slice(std::uint64_t i) const {
  if (i > taylor_degree_bound(ctx_)) {
    throw InvalidArgument("Taylor index " + std::to_string(i) + " exceeds the bound " +
                          std::to_string(taylor_degree_bound(ctx_)));
  }
  FpVector out;
  for (const FpPoly& pj : p_) {
    out.push_back(drop_variable(coeff_of_power(pj, 0, static_cast<Exponent>(i)), 0));
  }
  return out;
}

const FpVector& FpSolutions::shifted_p_vector() const {
  std::call_once(shifted_once_, [this] {
    const FpRing ring(ctx_);
    const std::size_t nv = ctx_.points() + 1;
    const FpPoly shift = FpPoly::variable(ring, nv, 0) + FpPoly::variable(ring, nv, 1);
    FpVector out;
    for (const FpPoly& pj : p_) {
      out.push_back(substitute(pj, 0, shift));
      budget_.check(out.back().size(), "shifted P-vector coordinate");
    }
    shifted_ = std::move(out);
  });
  return shifted_;
}

FpVector FpSolutions::shifted_slice(std::uint64_t i) const {
  if (i > taylor_degree_bound(ctx_)) {
    throw InvalidArgument("Taylor index " + std::to_string(i) + " exceeds the bound " +
                          std::to_string(taylor_degree_bound(ctx_)));
  }
  FpVector out;
  for (const FpPoly& pj : shifted_p_vector()) {
    out.push_back(drop_variable(coeff_of_power(pj, 0, static_cast<Exponent>(i)), 0));
  }
  return out;
}

FpVector FpSolutions::solution_I(unsigned m) const {
  check_m(m);
  return taylor_slice(std::uint64_t{ctx_.g() - m} * ctx_.p() - 1);
}

FpVector FpSolutions::solution_J(unsigned m) const {
  check_m(m);
  const FpRing ring(ctx_);
  const unsigned n = ctx_.points();
  FpVector acc(n, FpPoly(ring, n));
  const unsigned base = ctx_.g() - m - 1;
  for (unsigned l = 0; l <= m; ++l) {
    Monomial z1(n, 0);
    z1[0] = l * ctx_.p();
    const FpValue c = lucas_binom(base + l, base, ctx_);
    acc = add(acc, scale(solution_I(m - l), FpPoly::monomial(ring, n, z1, c)));
  }
  return acc;
}

FpVector FpSolutions::solution_J_shifted(unsigned m) const {
  check_m(m);
  return shifted_slice(std::uint64_t{ctx_.g() - m} * ctx_.p() - 1);
}

namespace {

template <class TermFn>
FpVector assemble_k(const PrimeContext& ctx, unsigned m, TermFn term) {
  const FpRing ring(ctx);
  const unsigned n = ctx.points();
  std::vector<std::vector<FpPoly::Term>> coords(n);
  for (const Monomial& ell : delta_set(ctx, m, ctx.g()).tuples) {
    const auto v = term(ctx, m, ell);
    for (unsigned c = 0; c < n; ++c) coords[c].push_back({ell, v[c]});
  }
  FpVector out;
  for (auto& terms : coords) out.push_back(FpPoly::from_terms(ring, n - 2, std::move(terms)));
  return out;
}

}  // namespace

FpVector solution_K(const PrimeContext& ctx, unsigned m, bool four_power) {
  if (m >= ctx.g()) {
    throw InvalidArgument("solution index m must lie in [0, g-1] (got " + std::to_string(m) + ")");
  }
  return four_power ? assemble_k(ctx, m, k_term_four_power) : assemble_k(ctx, m, k_term);
}

FpVector FpSolutions::solution_K(unsigned m) const { return kzfp::solution_K(ctx_, m, false); }

FpVector FpSolutions::solution_K_four_power(unsigned m) const { return kzfp::solution_K(ctx_, m, true); }

}  // namespace kzfp
