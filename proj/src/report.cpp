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

#include "kzfp/report.hpp"

#include "kzfp/cartier_manin.hpp"
#include "kzfp/fp_solutions.hpp"
#include "parallel.hpp"

namespace kzfp {

using nlohmann::json;

namespace {

json tuple_json(const Tuple& k) {
  json arr = json::array();
  for (auto v : k) arr.push_back(v);
  return arr;
}

json dyadic_json(const DyadicVector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.to_string());
  return arr;
}

json values_json(const std::vector<FpValue>& v) {
  json arr = json::array();
  for (auto x : v) arr.push_back(x);
  return arr;
}

json failure_json(const SweepFailure& f) {
  return json{{"kind", f.kind},
              {"k", tuple_json(f.k)},
              {"exact", dyadic_json(f.exact)},
              {"left", values_json(f.left)},
              {"right", values_json(f.right)},
              {"admissible", f.admissible}};
}

json solution_json(const FpVector& v, std::span<const std::string> names, std::uint64_t degree) {
  return json{{"vector", vector_json(v, names)},
              {"degree", degree},
              {"homogeneity", homogeneity_string(v)},
              {"terms", total_terms(v)}};
}

}  // namespace

std::string vector_residual_string(const FpVector& v, std::span<const std::string> names) {
  std::string out;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_zero()) continue;
    if (!out.empty()) out += "; ";
    out += "c" + std::to_string(c + 1) + ": " + to_string(v[c], names);
  }
  return out.empty() ? "0" : out;
}

json verdict_json(const KzVerdict& verdict, unsigned points) {
  const auto names = z_names(points);
  json eqs = json::array();
  for (const auto& e : verdict.equations) {
    eqs.push_back(json{{"i", e.i}, {"pass", e.pass}, {"residual", vector_residual_string(e.residual, names)}});
  }
  return json{{"constraint_sum_zero", verdict.constraint_sum_zero}, {"equations", eqs}};
}

json vector_json(const FpVector& v, std::span<const std::string> names) {
  json arr = json::array();
  for (const auto& f : v) arr.push_back(to_string(f, names));
  return arr;
}

std::string homogeneity_string(const FpVector& v) {
  bool seen = false;
  std::uint64_t degree = 0;
  for (const auto& f : v) {
    const Homogeneity h = is_homogeneous(f);
    if (!h.homogeneous()) return "not homogeneous";
    if (h.kind != Homogeneity::Kind::kDegree) continue;
    if (seen && h.degree != degree) return "not homogeneous";
    seen = true;
    degree = h.degree;
  }
  return seen ? "homogeneous of degree " + std::to_string(degree) : "zero";
}

Report solve_report(const PrimeContext& ctx, const TermBudget& budget, unsigned jobs) {
  const FpSolutions sols(ctx, budget);
  const unsigned g = ctx.g();
  const auto zn = z_names(ctx.points());
  const auto ln = lambda_names(g);

  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::pair<json, bool>> out;
    for (auto m64 = begin; m64 < end; ++m64) {
      const auto m = static_cast<unsigned>(m64);
      const std::uint64_t degree = solution_degree(ctx, m);
      const FpVector I = sols.solution_I(m);
      const FpVector J = sols.solution_J(m);
      const FpVector K = sols.solution_K(m);
      const KzVerdict vi = verify_kz(I, ctx);
      const KzVerdict vj = verify_kz(J, ctx);
      const bool shifted_ok = (sols.solution_J_shifted(m) == J);
      const bool rescaled_ok = (homogenize_lambda(ctx, K, degree, budget) == J);

      json I_json = solution_json(I, zn, degree);
      I_json["verdict"] = verdict_json(vi, ctx.points());
      I_json["pass"] = vi.pass();
      json J_json = solution_json(J, zn, degree);
      J_json["verdict"] = verdict_json(vj, ctx.points());
      J_json["pass"] = vj.pass();
      json K_json{{"vector", vector_json(K, ln)}, {"terms", total_terms(K)}};

      const bool ok = vi.pass() && vj.pass() && shifted_ok && rescaled_ok;
      json entry{{"I", I_json},
                 {"J", J_json},
                 {"K", K_json},
                 {"identities", json{{"J_by_shifted_extraction", shifted_ok}, {"J_from_K_rescaled", rescaled_ok}}},
                 {"pass", ok}};
      out.emplace_back(std::move(entry), ok);
    }
    return out;
  };

  Report r;
  r.pass = true;
  json solutions = json::object();
  unsigned m = 0;
  for (auto& part : detail::run_chunked(g, jobs, chunk)) {
    for (auto& [entry, ok] : part) {
      solutions[std::to_string(m++)] = std::move(entry);
      r.pass = r.pass && ok;
    }
  }
  const DisjointnessVerdict dv = check_support_disjointness(ctx);
  json sizes = json::array();
  for (auto s : dv.set_sizes) sizes.push_back(s);
  r.pass = r.pass && dv.pass();
  r.json = json{{"g", g},
                {"p", ctx.p()},
                {"solutions", solutions},
                {"independence",
                 json{{"injective", dv.injective}, {"disjoint", dv.disjoint}, {"set_sizes", sizes}, {"detail", dv.detail}}},
                {"all_pass", r.pass}};
  return r;
}

Report cartier_numeric_report(const PrimeContext& ctx, std::span<const std::int64_t> lambda) {
  const CartierManinNumeric cm = cm_numeric(ctx, lambda);
  json matrix = json::array();
  for (const auto& row : cm.entries) matrix.push_back(values_json(row));
  json lam = json::array();
  for (auto v : lambda) lam.push_back(ctx.reduce(v));
  Report r;
  r.pass = true;
  r.json = json{{"g", ctx.g()}, {"p", ctx.p()}, {"mode", "numeric"}, {"lambda", lam}, {"matrix", matrix},
                {"singular", cm.singular}};
  return r;
}

Report cartier_symbolic_report(const PrimeContext& ctx) {
  const PolyMatrix cm = cm_symbolic(ctx);
  const auto ln = lambda_names(ctx.g());
  json matrix = json::array();
  for (const auto& row : cm) {
    json jr = json::array();
    for (const auto& f : row) jr.push_back(to_string(f, ln));
    matrix.push_back(jr);
  }
  json vars = json::array();
  for (const auto& n : ln) vars.push_back(n);
  Report r;
  r.pass = true;
  r.json = json{{"g", ctx.g()}, {"p", ctx.p()}, {"mode", "symbolic"}, {"variables", vars}, {"matrix", matrix}};
  return r;
}

Report decomposition_report(const PrimeContext& ctx, std::uint64_t box, unsigned depth, unsigned jobs,
                            const TermBudget& budget) {
  check_truncation(ctx, depth, box);
  const unsigned dim = 2 * ctx.g() - 1;
  std::size_t volume = 1;
  for (unsigned i = 0; i < dim && box != 0; ++i) {
    if (volume > budget.max_terms() / box) {
      throw ResourceLimit("box sweep covers more than " + std::to_string(budget.max_terms()) +
                          " tuples (raise --max-terms to allow it)");
    }
    volume *= box;
  }
  const DecompositionResult dec = decompose_L(ctx, depth, box, jobs);
  const SweepReport sweep = check_vanishing_criterion(ctx, box, jobs, true);

  json failures = json::array();
  for (const auto& f : sweep.failures) failures.push_back(failure_json(f));
  for (const auto& f : dec.mismatches) failures.push_back(failure_json(f));

  const auto ln = lambda_names(ctx.g());
  json blocks = json::array();
  for (const auto& b : dec.blocks) {
    json idx = json::array();
    for (auto v : b.index.m) idx.push_back(v);
    blocks.push_back(json{{"m", idx}, {"normalization", b.normalization}, {"support_size", b.support_size}});
  }

  Report r;
  r.pass = sweep.pass() && dec.pass();
  r.json = json{{"g", ctx.g()},
                {"p", ctx.p()},
                {"box", box},
                {"depth", depth},
                {"tuples_checked", sweep.tuples_checked},
                {"admissible_count", sweep.admissible_count},
                {"congruences_checked", sweep.congruences_checked},
                {"literal_product_matches", sweep.literal_matches},
                {"failures", failures},
                {"decomposition",
                 json{{"blocks", blocks}, {"supports_disjoint", dec.supports_disjoint},
                      {"mismatches", dec.mismatches.size()}}},
                {"all_pass", r.pass}};
  return r;
}

Report taylor_slice_report(const PrimeContext& ctx, std::uint64_t index, const TermBudget& budget) {
  Report r;
  const auto zn = z_names(ctx.points());
  if (index > taylor_degree_bound(ctx)) {
    // Beyond the degree bound the slice is identically zero.
    r.json = json{{"g", ctx.g()}, {"p", ctx.p()}, {"index", index}, {"vector", vector_json(FpVector(ctx.points(), FpPoly(FpRing(ctx), ctx.points())), zn)},
                  {"beyond_degree_bound", true}};
    r.pass = true;
    return r;
  }
  const FpSolutions sols(ctx, budget);
  const FpVector v = sols.taylor_slice(index);
  const KzVerdict verdict = verify_kz(v, ctx);
  r.pass = true;
  r.json = json{{"g", ctx.g()},
                {"p", ctx.p()},
                {"index", index},
                {"vector", vector_json(v, zn)},
                {"homogeneity", homogeneity_string(v)},
                {"verdict", verdict_json(verdict, ctx.points())},
                {"kz_pass", verdict.pass()},
                {"beyond_degree_bound", false}};
  return r;
}

Report taylor_l_report(const PrimeContext& ctx, std::span<const std::uint64_t> k) {
  const DyadicVector exact = taylor_L(ctx.g(), k);
  const TupleAnalysis t = analyze_tuple(ctx, k);
  Report r;
  r.pass = true;
  r.json = json{{"g", ctx.g()},
                {"p", ctx.p()},
                {"k", tuple_json(t.k)},
                {"exact", dyadic_json(exact)},
                {"mod_p", values_json(reduce_mod_p(exact, ctx))},
                {"admissible", t.admissible}};
  return r;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace kzfp
