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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "kzfp/cartier_manin.hpp"
#include "kzfp/decomposition.hpp"
#include "kzfp/fp_solutions.hpp"
#include "kzfp/kz_core.hpp"

namespace {

using namespace kzfp;

struct Pair {
  std::uint32_t p;
  unsigned g;
};

const std::vector<Pair> kSolvePairs{{5, 1}, {7, 1}, {11, 1}, {13, 1}, {5, 2}, {7, 2}, {11, 2}, {7, 3}};
const std::vector<Pair> kSweepPairs{{5, 1}, {7, 1}, {5, 2}};

std::string tag(const Pair& c) { return "(g=" + std::to_string(c.g) + ",p=" + std::to_string(c.p) + ")"; }

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

class Cache {
 public:
  const FpSolutions& get(const Pair& c) {
    auto key = std::make_pair(c.g, c.p);
    auto it = sols_.find(key);
    if (it == sols_.end()) it = sols_.emplace(key, std::make_unique<FpSolutions>(PrimeContext(c.p, c.g))).first;
    return *it->second;
  }

 private:
  std::map<std::pair<unsigned, std::uint32_t>, std::unique_ptr<FpSolutions>> sols_;
};

Outcome kz_suite(Cache& cache) {
  Outcome o;
  unsigned checked = 0;
  for (const Pair& c : kSolvePairs) {
    const FpSolutions& s = cache.get(c);
    for (unsigned m = 0; m < c.g; ++m) {
      if (!verify_kz(s.solution_I(m), s.context()).pass()) o.fail("I^" + std::to_string(m) + " " + tag(c));
      if (!verify_kz(s.solution_J(m), s.context()).pass()) o.fail("J^" + std::to_string(m) + " " + tag(c));
      checked += 2;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " solutions over 8 (g,p)";
  return o;
}

Outcome basis_identities(Cache& cache) {
  Outcome o;
  unsigned checked = 0;
  for (const Pair& c : kSolvePairs) {
    const FpSolutions& s = cache.get(c);
    for (unsigned m = 0; m < c.g; ++m) {
      const FpVector J = s.solution_J(m);
      if (!(s.solution_J_shifted(m) == J)) o.fail("shifted extraction " + tag(c));
      if (!(homogenize_lambda(s.context(), s.solution_K(m), solution_degree(s.context(), m)) == J)) {
        o.fail("rescaling " + tag(c));
      }
      checked += 2;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " exact identities";
  return o;
}

Outcome independence() {
  Outcome o;
  for (const Pair& c : kSolvePairs) {
    const DisjointnessVerdict v = check_support_disjointness(PrimeContext(c.p, c.g));
    if (!v.pass()) o.fail(tag(c) + ": " + v.detail);
  }
  if (o.pass) o.detail = "8 (g,p)";
  return o;
}

Outcome cartier_manin() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  unsigned points = 0;
  for (const Pair& c : kSolvePairs) {
    const PrimeContext ctx(c.p, c.g);
    const PolyMatrix sym = cm_symbolic(ctx);
    std::uniform_int_distribution<std::int64_t> dist(0, c.p - 1);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::int64_t> lam(2 * c.g - 1);
      std::vector<FpValue> red;
      for (auto& v : lam) {
        v = dist(rng);
        red.push_back(ctx.reduce(v));
      }
      if (cm_numeric(ctx, lam).entries != evaluate_matrix(sym, red)) o.fail("numeric vs symbolic " + tag(c));
      ++points;
    }
  }
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const PrimeContext ctx(p, 1);
    std::vector<FpPoly::Term> terms;
    for (std::uint64_t k = 0; k <= ctx.half(); ++k) {
      const FpValue b = binom_half_mod_p(k, ctx);
      terms.push_back({Monomial{static_cast<Exponent>(k)}, ctx.mul(ctx.sign(ctx.half()), ctx.mul(b, b))});
    }
    if (!(cm_symbolic(ctx)[0][0] == FpPoly::from_terms(FpRing(ctx), 1, std::move(terms)))) {
      o.fail("genus-one closed form p=" + std::to_string(p));
    }
  }
  if (o.pass) o.detail = std::to_string(points) + " random points, genus-one form for p in {3,5,7,11,13}";
  return o;
}

std::map<std::pair<unsigned, std::uint32_t>, SweepReport> sweeps;

const SweepReport& sweep(const Pair& c) {
  auto key = std::make_pair(c.g, c.p);
  auto it = sweeps.find(key);
  if (it == sweeps.end()) {
    it = sweeps.emplace(key, check_vanishing_criterion(PrimeContext(c.p, c.g), std::uint64_t{c.p} * c.p, 1, true))
             .first;
  }
  return it->second;
}

Outcome vanishing() {
  Outcome o;
  std::uint64_t tuples = 0;
  for (const Pair& c : kSweepPairs) {
    const SweepReport& r = sweep(c);
    tuples += r.tuples_checked;
    for (const auto& f : r.failures) {
      if (f.kind == "vanishing") o.fail("counterexample " + tag(c));
    }
  }
  if (o.pass) o.detail = std::to_string(tuples) + " tuples, 0 counterexamples";
  return o;
}

Outcome congruence() {
  Outcome o;
  std::uint64_t checked = 0;
  std::uint64_t literal = 0;
  for (const Pair& c : kSweepPairs) {
    const SweepReport& r = sweep(c);
    checked += r.congruences_checked;
    literal += r.literal_matches;
    if (r.congruences_checked != r.admissible_count) o.fail("not every admissible tuple checked " + tag(c));
    for (const auto& f : r.failures) {
      if (f.kind == "congruence") o.fail("mismatch " + tag(c));
    }
  }
  if (o.pass) {
    o.detail = std::to_string(checked) + " admissible tuples, normalized product (unnormalized product matches " +
               std::to_string(literal) + ")";
  }
  return o;
}

Outcome decomposition() {
  Outcome o;
  std::uint64_t tuples = 0;
  for (const Pair& c : std::vector<Pair>{{5, 1}, {5, 2}}) {
    const DecompositionResult r = decompose_L(PrimeContext(c.p, c.g), 1, std::uint64_t{c.p} * c.p);
    tuples += r.tuples_checked;
    if (!r.supports_disjoint) o.fail("overlapping supports " + tag(c));
    if (!r.mismatches.empty()) o.fail(std::to_string(r.mismatches.size()) + " mismatches " + tag(c));
  }
  if (o.pass) o.detail = std::to_string(tuples) + " tuples, supports disjoint";
  return o;
}

Outcome j_vec_suite(Cache& cache) {
  Outcome o;
  unsigned count = 0;
  for (const Pair& c : kSweepPairs) {
    const FpSolutions& s = cache.get(c);
    const PrimeContext& ctx = s.context();
    for (const MIndex& idx : m_indices(ctx, 1)) {
      const FpVector J = solution_J_vec(ctx, idx);
      ++count;
      if (!verify_kz(J, ctx).pass()) o.fail("KZ " + tag(c));
      if (idx.depth() == 0) {
        if (!(J == scale(s.solution_J(idx.m[1]), central_binom_mod_p(idx.m[1], ctx)))) o.fail("depth-0 " + tag(c));
      } else if (!express_in_I_basis(s, J).pass) {
        o.fail("span certificate " + tag(c));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " indices with a <= 1 over (1,5), (1,7), (2,5)";
  return o;
}

Outcome spot_values() {
  Outcome o;
  const Tuple k1{0};
  const DyadicVector g1{DyadicRational(mpz_class(1), 1), DyadicRational(-1), DyadicRational(mpz_class(1), 1)};
  if (taylor_L(1, k1) != g1) o.fail("L_0 genus one");
  const Tuple k2{0, 0, 0};
  const DyadicRational b = binom_neg_half(2);
  const DyadicVector g2{b, b * DyadicRational(-4), b, b, b};
  if (b != DyadicRational(mpz_class(3), 3) || taylor_L(2, k2) != g2) o.fail("L_0 genus two");
  const PrimeContext c3(3, 1);
  if (to_string(cm_symbolic(c3)[0][0], lambda_names(1)) != "2 + 2*l3") o.fail("Cartier-Manin g=1 p=3");
  if (o.pass) o.detail = "L_0 for g=1,2 and 2 + 2*l3";
  return o;
}

}  // namespace

int main() {
  Cache cache;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"KZ verification of I^m and J^m", [&] { return kz_suite(cache); }},
      {"shifted extraction and rescaling identities", [&] { return basis_identities(cache); }},
      {"support disjointness certificate", independence},
      {"Cartier-Manin symbolic/numeric agreement", cartier_manin},
      {"vanishing criterion on k_i < p^2", vanishing},
      {"congruence for admissible tuples", congruence},
      {"decomposition with depth 1 on k_i < p^2", decomposition},
      {"J_vec solutions, depth-0 scaling, span certificates", [&] { return j_vec_suite(cache); }},
      {"spot values", spot_values},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s -- %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
