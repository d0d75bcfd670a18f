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

#include "kzfp/decomposition.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "kzfp/cartier_manin.hpp"
#include "parallel.hpp"

namespace kzfp {

namespace {

std::uint64_t sum_of(std::span<const std::uint64_t> k) {
  std::uint64_t s = 0;
  for (auto v : k) s += v;
  return s;
}

DyadicVector scale_shape(const DyadicRational& scalar, unsigned g, std::span<const std::uint64_t> k) {
  const auto s = static_cast<long>(sum_of(k));
  DyadicVector v;
  v.push_back(scalar);
  v.push_back(scalar * DyadicRational(-2 * s - 2 * static_cast<long>(g)));
  for (auto ki : k) v.push_back(scalar * DyadicRational(2 * static_cast<long>(ki) + 1));
  return v;
}

void require_shape(unsigned g, std::span<const std::uint64_t> k) {
  if (g == 0 || k.size() != 2 * g - 1) {
    throw InvalidArgument("Taylor index needs 2g-1 = " + std::to_string(2 * g - 1) + " entries");
  }
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// Tuple with mixed-radix index `idx` in [0, box)^dim, first coordinate fastest.
Tuple tuple_at(std::uint64_t idx, std::uint64_t box, std::size_t dim) {
  Tuple k(dim);
  for (auto& v : k) {
    v = idx % box;
    idx /= box;
  }
  return k;
}

Monomial to_monomial(const Tuple& k) { return Monomial(k.begin(), k.end()); }

bool any_nonzero(const std::vector<FpValue>& v) {
  return std::any_of(v.begin(), v.end(), [](FpValue x) { return x != 0; });
}

FpPoly without_constant(const FpPoly& f) {
  std::vector<FpPoly::Term> terms;
  for (const auto& t : f.terms()) {
    if (total_degree(t.exps) != 0) terms.push_back(t);
  }
  return FpPoly::from_terms(f.ring(), f.nvars(), std::move(terms));
}

}  // namespace

DyadicVector taylor_L(unsigned g, std::span<const std::uint64_t> k) {
  require_shape(g, k);
  const std::uint64_t s = sum_of(k);
  mpz_class num = binom_exact(2 * (s + g), static_cast<std::int64_t>(s + g));
  for (auto ki : k) num *= binom_exact(2 * ki, static_cast<std::int64_t>(ki));
  return scale_shape(DyadicRational(num, 2 * (2 * s + g)), g, k);
}

DyadicVector taylor_L_half_binomial(unsigned g, std::span<const std::uint64_t> k) {
  require_shape(g, k);
  DyadicRational scalar = binom_neg_half(sum_of(k) + g);
  if (g % 2 == 1) scalar = -scalar;
  for (auto ki : k) scalar *= binom_neg_half(ki);
  return scale_shape(scalar, g, k);
}

std::vector<FpValue> reduce_mod_p(const DyadicVector& v, const PrimeContext& ctx) {
  std::vector<FpValue> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(dyadic_mod_p(x, ctx));
  return out;
}

TupleAnalysis analyze_tuple(const PrimeContext& ctx, std::span<const std::uint64_t> k) {
  require_shape(ctx.g(), k);
  const std::uint32_t p = ctx.p();
  TupleAnalysis t;
  t.k.assign(k.begin(), k.end());

  std::vector<std::vector<std::uint32_t>> columns;
  std::size_t rows = 1;
  for (auto ki : k) {
    columns.push_back(base_p_digits(ki, p));
    while (columns.back().size() > 1 && columns.back().back() == 0) columns.back().pop_back();
    rows = std::max(rows, columns.back().size());
  }
  t.digits.assign(rows, std::vector<std::uint32_t>(k.size(), 0));
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t j = 0; j < columns[i].size(); ++j) t.digits[j][i] = columns[i][j];
  }

  t.digits_bounded = true;
  t.carries_bounded = true;
  t.shifts.push_back(ctx.g());
  for (std::size_t j = 0; j < rows; ++j) {
    std::uint64_t level = t.shifts.back();
    Monomial row;
    for (auto d : t.digits[j]) {
      level += d;
      if (d > ctx.half()) t.digits_bounded = false;
      row.push_back(d);
    }
    const std::uint64_t carry = level / p;
    const std::uint64_t digit = level - carry * p;
    t.level_in_delta.push_back(in_delta(ctx, carry, t.shifts.back(), row));
    t.shifts.push_back(carry);
    t.level_sums.push_back(digit);
    if (digit > ctx.half()) t.carries_bounded = false;
  }
  t.admissible = t.digits_bounded && t.carries_bounded;
  return t;
}

FpValue block_normalization(const PrimeContext& ctx, std::uint64_t top_shift) {
  return ctx.mul(ctx.sign(ctx.half()), ctx.pow_signed(4, -static_cast<std::int64_t>(top_shift)));
}

CongruenceRecord check_congruence(const PrimeContext& ctx, std::span<const std::uint64_t> k) {
  const TupleAnalysis t = analyze_tuple(ctx, k);
  if (!t.admissible) throw InvalidArgument("check_congruence needs an admissible tuple");
  const unsigned a = t.depth();
  const std::uint64_t top = t.shifts[a + 1];

  CongruenceRecord rec;
  rec.k = t.k;
  rec.left = reduce_mod_p(taylor_L(ctx.g(), k), ctx);

  FpValue c = ctx.mul(ctx.sign(std::int64_t{a} * ctx.half()), central_binom_mod_p(top, ctx));
  Monomial exps(k.size(), 0);
  std::uint64_t stride = 1;
  for (unsigned j = 1; j <= a; ++j) {
    stride *= ctx.p();
    const Monomial row(t.digits[j].begin(), t.digits[j].end());
    const CmTerm term = cm_term(ctx, static_cast<unsigned>(t.shifts[j + 1]), static_cast<unsigned>(t.shifts[j]), row);
    c = ctx.mul(c, term.coeff);
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += static_cast<Exponent>(stride * term.exps[i]);
  }
  const Monomial row0(t.digits[0].begin(), t.digits[0].end());
  const auto kterm = k_term(ctx, static_cast<unsigned>(t.shifts[1]), row0);
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += row0[i];

  rec.normalization = block_normalization(ctx, top);
  for (FpValue v : kterm) {
    const FpValue lit = ctx.mul(c, v);
    rec.right_literal.push_back(lit);
    rec.right.push_back(ctx.mul(rec.normalization, lit));
  }
  rec.monomial_matches = (exps == to_monomial(t.k));
  rec.pass = rec.monomial_matches && rec.left == rec.right;
  rec.literal_matches = rec.monomial_matches && rec.left == rec.right_literal;
  return rec;
}

SweepReport check_vanishing_criterion(const PrimeContext& ctx, std::uint64_t box, unsigned jobs,
                                      bool congruences) {
  if (box < 1) throw InvalidArgument("box bound must be at least 1");
  const std::size_t dim = 2 * ctx.g() - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= box;

  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    SweepReport part;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const Tuple k = tuple_at(idx, box, dim);
      const DyadicVector exact = taylor_L(ctx.g(), k);
      const auto left = reduce_mod_p(exact, ctx);
      const TupleAnalysis t = analyze_tuple(ctx, k);
      ++part.tuples_checked;
      if (t.admissible) ++part.admissible_count;
      if (any_nonzero(left) != t.admissible) {
        part.failures.push_back({"vanishing", k, exact, left, {}, t.admissible});
        continue;
      }
      if (congruences && t.admissible) {
        const CongruenceRecord rec = check_congruence(ctx, k);
        ++part.congruences_checked;
        if (rec.literal_matches) ++part.literal_matches;
        if (!rec.pass) part.failures.push_back({"congruence", k, exact, rec.left, rec.right, true});
      }
    }
    return part;
  };

  SweepReport report;
  report.g = ctx.g();
  report.p = ctx.p();
  report.box = box;
  for (auto& part : detail::run_chunked(total, jobs, chunk)) {
    report.tuples_checked += part.tuples_checked;
    report.admissible_count += part.admissible_count;
    report.congruences_checked += part.congruences_checked;
    report.literal_matches += part.literal_matches;
    for (auto& f : part.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

bool is_valid_index(const PrimeContext& ctx, const MIndex& index) {
  if (index.m.size() < 2 || index.m.front() != ctx.g()) return false;
  return std::all_of(index.m.begin() + 1, index.m.end(), [&](unsigned v) { return v < ctx.g(); });
}

std::vector<MIndex> m_indices(const PrimeContext& ctx, unsigned a_max) {
  std::vector<MIndex> out;
  for (unsigned a = 0; a <= a_max; ++a) {
    std::vector<unsigned> tail(a + 1, 0);
    while (true) {
      MIndex idx;
      idx.m.push_back(ctx.g());
      idx.m.insert(idx.m.end(), tail.begin(), tail.end());
      out.push_back(std::move(idx));
      // Lexicographic increment, last entry fastest.
      std::size_t pos = tail.size();
      while (pos > 0 && tail[pos - 1] + 1 == ctx.g()) tail[--pos] = 0;
      if (pos == 0) break;
      ++tail[pos - 1];
    }
  }
  return out;
}

FpVector k_vec(const PrimeContext& ctx, const MIndex& index) {
  if (!is_valid_index(ctx, index)) throw InvalidArgument("index vector is not in M");
  const unsigned a = index.depth();
  const FpRing ring(ctx);
  const std::size_t nv = 2 * ctx.g() - 1;
  FpPoly factor = FpPoly::constant(ring, nv, ctx.mul(ctx.sign(std::int64_t{a} * ctx.half()),
                                                     central_binom_mod_p(index.top(), ctx)));
  std::uint64_t stride = 1;
  for (unsigned j = 1; j <= a; ++j) {
    stride *= ctx.p();
    FpPoly c = inflate_exponents(cm_entry(ctx, index.m[j + 1], index.m[j]), static_cast<Exponent>(stride));
    if (j == a) c = without_constant(c);
    factor *= c;
  }
  return scale(solution_K(ctx, index.m[1]), factor);
}

void check_truncation(const PrimeContext& ctx, unsigned a_max, std::uint64_t box) {
  if (box < 1) throw InvalidArgument("box bound must be at least 1");
  // box <= p^{a_max+1}, computed without overflow.
  std::uint64_t limit = 1;
  for (unsigned i = 0; i <= a_max; ++i) {
    limit *= ctx.p();
    if (limit >= box) return;
  }
  throw InvalidArgument("box " + std::to_string(box) + " exceeds p^(depth+1) = " + std::to_string(limit) +
                        "; the truncated decomposition would be incomplete");
}

DecompositionResult decompose_L(const PrimeContext& ctx, unsigned a_max, std::uint64_t box, unsigned jobs) {
  check_truncation(ctx, a_max, box);

  DecompositionResult res;
  res.g = ctx.g();
  res.p = ctx.p();
  res.depth = a_max;
  res.box = box;

  std::unordered_map<Monomial, std::size_t, MonomialHash> owner;
  res.supports_disjoint = true;
  for (const MIndex& idx : m_indices(ctx, a_max)) {
    DecompositionBlock b;
    b.index = idx;
    b.poly = k_vec(ctx, idx);
    b.normalization = block_normalization(ctx, idx.top());
    std::unordered_set<Monomial, MonomialHash> support;
    for (const FpPoly& f : b.poly) {
      for (const auto& t : f.terms()) support.insert(t.exps);
    }
    b.support_size = support.size();
    for (const Monomial& m : support) {
      if (!owner.emplace(m, res.blocks.size()).second) res.supports_disjoint = false;
    }
    res.blocks.push_back(std::move(b));
  }

  const std::size_t dim = 2 * ctx.g() - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= box;
  const std::size_t n = ctx.points();

  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<SweepFailure> bad;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const Tuple k = tuple_at(idx, box, dim);
      const DyadicVector exact = taylor_L(ctx.g(), k);
      const auto left = reduce_mod_p(exact, ctx);
      std::vector<FpValue> right(n, 0);
      const Monomial mono = to_monomial(k);
      if (auto it = owner.find(mono); it != owner.end()) {
        const DecompositionBlock& b = res.blocks[it->second];
        for (std::size_t c = 0; c < n; ++c) right[c] = ctx.mul(b.normalization, b.poly[c].coeff(mono));
      }
      if (left != right) bad.push_back({"decomposition", k, exact, left, right, any_nonzero(left)});
    }
    return bad;
  };
  for (auto& part : detail::run_chunked(total, jobs, chunk)) {
    for (auto& f : part) res.mismatches.push_back(std::move(f));
  }
  res.tuples_checked = total;
  return res;
}

std::uint64_t j_vec_degree(const PrimeContext& ctx, const MIndex& index) {
  if (!is_valid_index(ctx, index)) throw InvalidArgument("index vector is not in M");
  const unsigned a = index.depth();
  const std::uint64_t p = ctx.p();
  std::uint64_t geometric = 0;
  for (unsigned j = 1; j <= a; ++j) geometric += ipow(p, j);
  return ctx.half() - ctx.g() + index.top() * ipow(p, a + 1) + geometric * ctx.half();
}

FpVector solution_J_vec(const PrimeContext& ctx, const MIndex& index, const TermBudget& budget) {
  return homogenize_lambda(ctx, k_vec(ctx, index), j_vec_degree(ctx, index), budget);
}

SpanCertificate express_in_I_basis(const FpSolutions& sols, const FpVector& sol) {
  const PrimeContext& ctx = sols.context();
  const unsigned g = ctx.g();
  const unsigned n = ctx.points();
  const FpRing ring(ctx);
  SpanCertificate cert;
  if (sol.size() != n) {
    cert.detail = "vector has the wrong length";
    return cert;
  }

  std::vector<FpVector> basis;
  // reduced exponent of a first-coordinate monomial -> (m, coefficient)
  std::map<Monomial, std::pair<unsigned, FpValue>> lookup;
  for (unsigned m = 0; m < g; ++m) {
    basis.push_back(sols.solution_I(m));
    for (const auto& t : basis.back()[0].terms()) lookup.emplace(t.exps, std::make_pair(m, t.coeff));
  }

  // Every monomial of c_m * I^m_1 is z^{p q + e} with e < p componentwise, so
  // c_m is read off term by term and must be consistent across the support.
  std::vector<std::map<Monomial, FpValue>> coeff_terms(g);
  for (const auto& t : sol[0].terms()) {
    Monomial reduced = t.exps;
    Monomial lifted = t.exps;
    for (std::size_t i = 0; i < n; ++i) {
      reduced[i] = t.exps[i] % ctx.p();
      lifted[i] = t.exps[i] - reduced[i];
    }
    auto it = lookup.find(reduced);
    if (it == lookup.end()) {
      cert.detail = "first coordinate has a monomial outside every support";
      return cert;
    }
    const auto [m, c] = it->second;
    const FpValue value = ctx.mul(t.coeff, ctx.inv(c));
    auto [slot, fresh] = coeff_terms[m].emplace(std::move(lifted), value);
    if (!fresh && slot->second != value) {
      cert.detail = "inconsistent coefficient for I^" + std::to_string(m);
      return cert;
    }
  }

  FpVector rebuilt(n, FpPoly(ring, n));
  for (unsigned m = 0; m < g; ++m) {
    std::vector<FpPoly::Term> terms;
    for (auto& [mono, value] : coeff_terms[m]) terms.push_back({mono, value});
    cert.coefficients.push_back(FpPoly::from_terms(ring, n, std::move(terms)));
    rebuilt = add(rebuilt, scale(basis[m], cert.coefficients.back()));
  }
  cert.pass = (rebuilt == sol);
  cert.detail = cert.pass ? "ok" : "combination matches the first coordinate only";
  return cert;
}

}  // namespace kzfp
