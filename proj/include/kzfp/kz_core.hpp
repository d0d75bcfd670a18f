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

#ifndef KZFP_KZ_CORE_HPP
#define KZFP_KZ_CORE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kzfp/arith.hpp"
#include "kzfp/poly.hpp"

namespace kzfp {

/// Residual of the i-th equation after clearing denominators. `residual` has
/// one polynomial per vector coordinate; all zero iff the equation holds.
struct EquationCheck {
  unsigned i = 0;  // 1-based point index
  bool pass = false;
  FpVector residual;
};

struct KzVerdict {
  bool constraint_sum_zero = false;
  FpPoly coordinate_sum;
  std::vector<EquationCheck> equations;

  bool pass() const;
};

/// The explicit sl_2 KZ system on 2g+1 points over F_p:
///   dI/dz_i = 1/2 sum_{j != i} Omega^{(i,j)} I / (z_i - z_j),   sum_j I_j = 0.
class KzSystem {
 public:
  explicit KzSystem(const PrimeContext& ctx) : ctx_(ctx) {}

  const PrimeContext& context() const { return ctx_; }
  unsigned points() const { return ctx_.points(); }

  /// Omega^{(i,j)} with 1-based i != j: -1 at (i,i) and (j,j), 1 at (i,j) and (j,i).
  std::vector<std::vector<int>> omega(unsigned i, unsigned j) const;

  /// Checks 2 prod_{j != i}(z_i - z_j) dI/dz_i
  ///        = sum_{j != i} prod_{k != i,j}(z_i - z_k) Omega^{(i,j)} I
  /// for every i as an exact identity, plus the coordinate-sum constraint.
  KzVerdict verify(const FpVector& sol) const;

 private:
  PrimeContext ctx_;
};

inline KzVerdict verify_kz(const FpVector& sol, const PrimeContext& ctx) {
  return KzSystem(ctx).verify(sol);
}

/// The exponent set Gamma^m_j with the coefficients of I^m_j, computed from the
/// closed form (independently of the master polynomial expansion).
struct SupportSet {
  unsigned m = 0;
  unsigned j = 0;  // 1-based coordinate
  std::vector<Monomial> tuples;
  std::vector<FpValue> coeffs;
  /// Images of `tuples` in F_p^{2g+1}.
  std::vector<std::vector<FpValue>> projected;
};

SupportSet gamma_support(const PrimeContext& ctx, unsigned m, unsigned j);

/// Assembles the closed-form coefficients of gamma_support into a polynomial.
FpPoly support_polynomial(const PrimeContext& ctx, const SupportSet& support);

struct DisjointnessVerdict {
  bool injective = false;
  bool disjoint = false;
  std::vector<std::size_t> set_sizes;  // |Gamma^m_1|, m = 0..g-1
  std::string detail;

  bool pass() const { return injective && disjoint; }
};

/// Certifies linear independence of I^0..I^{g-1} over F_p[z^p] by showing that
/// the projections of Gamma^m_1 are injective and pairwise disjoint.
DisjointnessVerdict check_support_disjointness(const PrimeContext& ctx);

}  // namespace kzfp

#endif  // KZFP_KZ_CORE_HPP
