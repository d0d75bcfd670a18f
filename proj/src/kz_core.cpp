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

#include "kzfp/kz_core.hpp"

#include <algorithm>
#include <set>

#include "kzfp/error.hpp"
#include "kzfp/fp_solutions.hpp"

namespace kzfp {

bool KzVerdict::pass() const {
  return constraint_sum_zero &&
         std::all_of(equations.begin(), equations.end(), [](const EquationCheck& e) { return e.pass; });
}

std::vector<std::vector<int>> KzSystem::omega(unsigned i, unsigned j) const {
  const unsigned n = points();
  if (i == 0 || j == 0 || i > n || j > n || i == j) {
    throw InvalidArgument("omega needs distinct point indices in [1, 2g+1]");
  }
  std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
  w[i - 1][i - 1] = -1;
  w[j - 1][j - 1] = -1;
  w[i - 1][j - 1] = 1;
  w[j - 1][i - 1] = 1;
  return w;
}

KzVerdict KzSystem::verify(const FpVector& sol) const {
  const unsigned n = points();
  if (sol.size() != n) {
    throw InvalidArgument("KZ verification needs a vector of length 2g+1 = " + std::to_string(n) +
                          " (got " + std::to_string(sol.size()) + ")");
  }
  const FpRing ring(ctx_);
  for (const FpPoly& f : sol) {
    if (f.nvars() != n || !(f.ring() == ring)) {
      throw StructuralError("KZ verification needs polynomials over F_p in z_1..z_{2g+1}");
    }
  }

  KzVerdict verdict{false, FpPoly(ring, n), {}};
  for (const FpPoly& f : sol) verdict.coordinate_sum += f;
  verdict.constraint_sum_zero = verdict.coordinate_sum.is_zero();

  auto diff = [&](unsigned a, unsigned b) {
    return FpPoly::variable(ring, n, a) - FpPoly::variable(ring, n, b);
  };

  for (unsigned i = 0; i < n; ++i) {
    // partial[j] = prod_{k != i, j} (z_i - z_k), for j != i
    std::vector<FpPoly> partial(n, FpPoly(ring, n));
    for (unsigned j = 0; j < n; ++j) {
      if (j == i) continue;
      FpPoly prod = FpPoly::constant(ring, n, 1);
      for (unsigned k = 0; k < n; ++k) {
        if (k != i && k != j) prod *= diff(i, k);
      }
      partial[j] = std::move(prod);
    }
    const unsigned any_j = (i == 0) ? 1 : 0;
    const FpPoly full = (partial[any_j] * diff(i, any_j)).scaled(2);

    EquationCheck eq;
    eq.i = i + 1;
    eq.residual.assign(n, FpPoly(ring, n));
    for (unsigned c = 0; c < n; ++c) eq.residual[c] = full * partial_derivative(sol[c], i);
    for (unsigned j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto w = omega(i + 1, j + 1);
      for (unsigned c = 0; c < n; ++c) {
        FpPoly row(ring, n);
        for (unsigned d = 0; d < n; ++d) {
          if (w[c][d] != 0) row += sol[d].scaled(ring.from_int(w[c][d]));
        }
        if (!row.is_zero()) eq.residual[c] -= partial[j] * row;
      }
    }
    eq.pass = is_zero_vector(eq.residual);
    verdict.equations.push_back(std::move(eq));
  }
  return verdict;
}

SupportSet gamma_support(const PrimeContext& ctx, unsigned m, unsigned j) {
  const unsigned n = ctx.points();
  if (m >= ctx.g() || j == 0 || j > n) {
    throw InvalidArgument("gamma_support needs 0 <= m <= g-1 and 1 <= j <= 2g+1");
  }
  const std::uint64_t target = solution_degree(ctx, m);
  const Exponent cap_other = ctx.half();
  const Exponent cap_j = ctx.half() - 1;
  const FpValue sign = ctx.sign(static_cast<std::int64_t>(target));

  SupportSet out;
  out.m = m;
  out.j = j;
  Monomial ell(n, 0);
  // Depth-first enumeration of tuples with the prescribed sum and caps.
  auto recurse = [&](auto&& self, unsigned pos, std::uint64_t remaining) -> void {
    const Exponent cap = (pos == j - 1) ? cap_j : cap_other;
    if (pos == n - 1) {
      if (remaining > cap) return;
      ell[pos] = static_cast<Exponent>(remaining);
      FpValue c = sign;
      for (unsigned i = 0; i < n; ++i) {
        c = ctx.mul(c, lucas_binom(i == j - 1 ? cap_j : cap_other, ell[i], ctx));
      }
      out.tuples.push_back(ell);
      out.coeffs.push_back(c);
      std::vector<FpValue> proj(n);
      for (unsigned i = 0; i < n; ++i) proj[i] = ctx.reduce(static_cast<std::int64_t>(ell[i]));
      out.projected.push_back(std::move(proj));
      return;
    }
    for (Exponent e = 0; e <= cap && e <= remaining; ++e) {
      ell[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  recurse(recurse, 0, target);
  return out;
}

FpPoly support_polynomial(const PrimeContext& ctx, const SupportSet& support) {
  std::vector<FpPoly::Term> terms;
  for (std::size_t k = 0; k < support.tuples.size(); ++k) {
    terms.push_back({support.tuples[k], support.coeffs[k]});
  }
  return FpPoly::from_terms(FpRing(ctx), ctx.points(), std::move(terms));
}

DisjointnessVerdict check_support_disjointness(const PrimeContext& ctx) {
  DisjointnessVerdict v;
  v.injective = true;
  v.disjoint = true;
  std::set<std::vector<FpValue>> seen_any;
  for (unsigned m = 0; m < ctx.g(); ++m) {
    const SupportSet s = gamma_support(ctx, m, 1);
    v.set_sizes.push_back(s.tuples.size());
    std::set<std::vector<FpValue>> image(s.projected.begin(), s.projected.end());
    if (image.size() != s.tuples.size()) {
      v.injective = false;
      v.detail += "projection of Gamma^" + std::to_string(m) + "_1 is not injective; ";
    }
    for (const auto& pt : image) {
      if (!seen_any.insert(pt).second) {
        v.disjoint = false;
        v.detail += "Gamma^" + std::to_string(m) + "_1 meets an earlier set; ";
        break;
      }
    }
  }
  if (v.detail.empty()) v.detail = "ok";
  return v;
}

}  // namespace kzfp
