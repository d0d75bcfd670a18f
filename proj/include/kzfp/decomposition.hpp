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

#ifndef KZFP_DECOMPOSITION_HPP
#define KZFP_DECOMPOSITION_HPP

// Reduction mod p of the distinguished hyperelliptic solution.
//
// The rescaled solution L(lambda) has Taylor coefficients L_k in Z[1/2]^{2g+1}
// indexed by k = (k_3..k_{2g+1}). This module computes them exactly, decides
// which survive mod p from the base-p digits of k, and matches the survivors
// against products of Cartier-Manin terms and terms of the F_p solutions K^m.
//
// Normalization. Expanding both sides with Lucas's theorem shows
//   L_k = eps(m_{a+1}) * (-1)^{a(p-1)/2} binom(2m_{a+1}, m_{a+1})
//         * prod_{j=1..a} C^{m_{j+1}}_{m_j; k^j} * K^{m_1}_{k^0}      (mod p)
// with eps(m) = (-1)^{(p-1)/2} 4^{-m}. Without eps (the "literal" product)
// the congruence fails whenever eps != 1, e.g. for every tuple when p = 3 mod 4.
// Both products are reported; checks use the one including eps.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kzfp/arith.hpp"
#include "kzfp/dyadic.hpp"
#include "kzfp/error.hpp"
#include "kzfp/fp_solutions.hpp"
#include "kzfp/poly.hpp"

namespace kzfp {

using DyadicVector = std::vector<DyadicRational>;
using Tuple = std::vector<std::uint64_t>;

/// L_k from the 4-power closed form
///   4^{-2|k|-g} binom(2(|k|+g), |k|+g) prod_i binom(2k_i, k_i) * (1, -2|k|-2g, 2k_3+1, ...).
DyadicVector taylor_L(unsigned g, std::span<const std::uint64_t> k);

/// L_k from the half-binomial form
///   (-1)^g binom(-1/2, |k|+g) prod_i binom(-1/2, k_i) * (1, -2|k|-2g, 2k_3+1, ...).
DyadicVector taylor_L_half_binomial(unsigned g, std::span<const std::uint64_t> k);

std::vector<FpValue> reduce_mod_p(const DyadicVector& v, const PrimeContext& ctx);

struct TupleAnalysis {
  Tuple k;
  /// digits[j][i] = k_{i+3}^j, j = 0..a.
  std::vector<std::vector<std::uint32_t>> digits;
  /// Shift coefficients m_0 = g, m_1, ..., m_{a+1}.
  std::vector<std::uint64_t> shifts;
  /// sum_i k_i^j + m_j - m_{j+1} p, the j-th base-p digit of |k| + g.
  std::vector<std::uint64_t> level_sums;
  std::vector<bool> level_in_delta;
  bool digits_bounded = false;
  bool carries_bounded = false;
  bool admissible = false;

  /// a: index of the highest nonzero digit row (0 for the zero tuple).
  unsigned depth() const { return static_cast<unsigned>(digits.size() - 1); }
};

TupleAnalysis analyze_tuple(const PrimeContext& ctx, std::span<const std::uint64_t> k);

/// eps(m) = (-1)^{(p-1)/2} 4^{-m} mod p.
FpValue block_normalization(const PrimeContext& ctx, std::uint64_t top_shift);

struct CongruenceRecord {
  Tuple k;
  std::vector<FpValue> left;           // L_k mod p
  std::vector<FpValue> right;          // eps * literal product
  std::vector<FpValue> right_literal;  // product without eps
  FpValue normalization = 1;
  bool monomial_matches = false;  // k^0 + sum_j p^j k^j == k
  bool pass = false;
  bool literal_matches = false;
};

/// Throws InvalidArgument for inadmissible tuples.
CongruenceRecord check_congruence(const PrimeContext& ctx, std::span<const std::uint64_t> k);

struct SweepFailure {
  std::string kind;  // "vanishing", "congruence" or "decomposition"
  Tuple k;
  DyadicVector exact;           // L_k
  std::vector<FpValue> left;    // L_k mod p
  std::vector<FpValue> right;   // product / decomposition side (empty for vanishing)
  bool admissible = false;
};

struct SweepReport {
  unsigned g = 0;
  std::uint32_t p = 0;
  std::uint64_t box = 0;
  std::uint64_t tuples_checked = 0;
  std::uint64_t admissible_count = 0;
  std::uint64_t congruences_checked = 0;
  std::uint64_t literal_matches = 0;
  std::vector<SweepFailure> failures;

  bool pass() const { return failures.empty(); }
};

/// Every tuple with all k_i < box: (L_k mod p != 0) <=> admissible. With
/// `congruences` set, also runs check_congruence on each admissible tuple.
SweepReport check_vanishing_criterion(const PrimeContext& ctx, std::uint64_t box, unsigned jobs = 1,
                                      bool congruences = true);

/// (m_0 = g, m_1, ..., m_{a+1}) with 0 <= m_j < g for j >= 1.
struct MIndex {
  std::vector<unsigned> m;

  unsigned depth() const { return static_cast<unsigned>(m.size()) - 2; }
  unsigned top() const { return m.back(); }
  friend bool operator==(const MIndex&, const MIndex&) = default;
};

bool is_valid_index(const PrimeContext& ctx, const MIndex& index);

/// All indices with depth a <= a_max, ordered by depth then lexicographically.
std::vector<MIndex> m_indices(const PrimeContext& ctx, unsigned a_max);

/// K_{vec m}(lambda) = (-1)^{a(p-1)/2} binom(2m_{a+1}, m_{a+1})
///   * prod_{j=1..a} C^{m_{j+1}}_{m_j}(lambda^{p^j}) * K^{m_1}(lambda).
/// For a >= 1 the top factor C^{m_{a+1}}_{m_a} omits its constant term, so the
/// top digit row of every monomial is nonzero and blocks of different depth
/// have disjoint supports.
FpVector k_vec(const PrimeContext& ctx, const MIndex& index);

struct DecompositionBlock {
  MIndex index;
  FpVector poly;
  FpValue normalization = 1;
  std::size_t support_size = 0;
};

struct DecompositionResult {
  unsigned g = 0;
  std::uint32_t p = 0;
  unsigned depth = 0;
  std::uint64_t box = 0;
  std::vector<DecompositionBlock> blocks;
  bool supports_disjoint = false;
  std::uint64_t tuples_checked = 0;
  std::vector<SweepFailure> mismatches;

  bool pass() const { return supports_disjoint && mismatches.empty(); }
};

/// Builds every K_{vec m} with depth <= a_max and checks, on the box k_i < box,
/// that L_k mod p equals the coefficient of lambda^k in sum eps * K_{vec m}.
/// Throws InvalidArgument when box > p^{a_max+1}.
/// Throws InvalidArgument unless 1 <= box <= p^{a_max+1}.
void check_truncation(const PrimeContext& ctx, unsigned a_max, std::uint64_t box);

DecompositionResult decompose_L(const PrimeContext& ctx, unsigned a_max, std::uint64_t box, unsigned jobs = 1);

/// Degree (p-1)/2 - g + m_{a+1} p^{a+1} + (p + ... + p^a)(p-1)/2 of J_{vec m}.
std::uint64_t j_vec_degree(const PrimeContext& ctx, const MIndex& index);

/// J_{vec m}(z): the homogenized pullback of K_{vec m} along
/// lambda_j = (z_j - z_1)/(z_2 - z_1).
FpVector solution_J_vec(const PrimeContext& ctx, const MIndex& index, const TermBudget& budget = TermBudget{});

/// Coefficients c_m in F_p[z^p] with sol = sum_m c_m I^m, found by matching the
/// first coordinate on the disjoint supports and then checked on every
/// coordinate.
struct SpanCertificate {
  bool pass = false;
  std::vector<FpPoly> coefficients;
  std::string detail;
};

SpanCertificate express_in_I_basis(const FpSolutions& sols, const FpVector& sol);

}  // namespace kzfp

#endif  // KZFP_DECOMPOSITION_HPP
