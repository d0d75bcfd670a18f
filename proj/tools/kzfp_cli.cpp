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

// kzfp command-line tool. JSON goes to stdout (or --out), logs to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage or validation
// error, 3 resource ceiling.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kzfp/kzfp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
  std::uint32_t g = 1;
  std::uint32_t p = 5;
  std::uint64_t max_terms = 0;
  unsigned jobs = 1;
  std::string out;
  std::vector<std::int64_t> lambda;
  bool symbolic = false;
  std::uint64_t box = 0;
  unsigned depth = 0;
  std::uint64_t index = 0;
  std::vector<std::uint64_t> k;
};

int status_exit(kzfp_status s) {
  switch (s) {
    case KZFP_OK:
      return kExitOk;
    case KZFP_INVALID_ARGUMENT:
    case KZFP_NULL_POINTER:
      return kExitUsage;
    case KZFP_RESOURCE_LIMIT:
      return kExitResource;
    default:
      return kExitVerification;
  }
}

int fail(kzfp_status s) {
  std::cerr << "kzfp: error: " << kzfp_last_error() << "\n";
  return status_exit(s);
}

bool emit(const Options& opt, char* json) {
  bool ok = true;
  if (opt.out.empty()) {
    std::fputs(json, stdout);
    std::fflush(stdout);
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    f << json;
    ok = static_cast<bool>(f);
    if (!ok) std::cerr << "kzfp: error: cannot write " << opt.out << "\n";
  }
  kzfp_string_free(json);
  return ok;
}

class Context {
 public:
  kzfp_status open(const Options& opt) { return kzfp_context_create(opt.g, opt.p, opt.max_terms, &ctx_); }
  ~Context() { kzfp_context_destroy(ctx_); }
  const kzfp_context* get() const { return ctx_; }

 private:
  kzfp_context* ctx_ = nullptr;
};

int run(const std::string& command, const Options& opt) {
  Context ctx;
  if (auto s = ctx.open(opt); s != KZFP_OK) return fail(s);

  char* json = nullptr;
  int all_pass = 1;
  kzfp_status s = KZFP_OK;
  if (command == "solve") {
    s = kzfp_solve(ctx.get(), opt.jobs, &json, &all_pass);
  } else if (command == "cartier") {
    if (opt.symbolic == !opt.lambda.empty()) {
      std::cerr << "kzfp: error: cartier needs exactly one of --lambda or --symbolic\n";
      return kExitUsage;
    }
    s = opt.symbolic ? kzfp_cartier_symbolic(ctx.get(), &json)
                     : kzfp_cartier_numeric(ctx.get(), opt.lambda.data(), opt.lambda.size(), &json);
  } else if (command == "verify-decomposition") {
    s = kzfp_verify_decomposition(ctx.get(), opt.box, opt.depth, opt.jobs, &json, &all_pass);
  } else if (command == "slice") {
    s = kzfp_taylor_slice(ctx.get(), opt.index, &json);
  } else if (command == "taylor-l") {
    s = kzfp_taylor_l(ctx.get(), opt.k.data(), opt.k.size(), &json);
  }
  if (s != KZFP_OK) return fail(s);
  if (!emit(opt, json)) return kExitUsage;
  const bool verifies = (command == "solve" || command == "verify-decomposition");
  std::cerr << "kzfp: " << command << " g=" << opt.g << " p=" << opt.p << ": "
            << (!verifies ? "done" : all_pass ? "all checks passed" : "verification FAILED") << "\n";
  return all_pass ? kExitOk : kExitVerification;
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("--g", opt.g, "Genus (number of points is 2g+1)")->required()->envname("KZFP_G");
  sub->add_option("--p", opt.p, "Odd prime p >= 2g+1")->required()->envname("KZFP_P");
  sub->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber)->envname("KZFP_JOBS");
  sub->add_option("--out", opt.out, "Write JSON to FILE instead of stdout")->envname("KZFP_OUT");
  sub->add_option("--max-terms", opt.max_terms, "Ceiling on stored polynomial terms (0 = default)")
      ->envname("KZFP_MAX_TERMS");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial solutions of hyperelliptic KZ equations over F_p", "kzfp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kzfp_version()));
  Options opt;

  auto* solve = app.add_subcommand("solve", "Build and verify I^m, J^m, K^m for m = 0..g-1");
  add_common(solve, opt);

  auto* cartier = app.add_subcommand("cartier", "Cartier-Manin matrix, numeric or symbolic");
  add_common(cartier, opt);
  cartier->add_option("--lambda", opt.lambda, "Comma-separated lambda_3..lambda_{2g+1}")
      ->delimiter(',')
      ->envname("KZFP_LAMBDA");
  cartier->add_flag("--symbolic", opt.symbolic, "Entries as polynomials in l3..")->envname("KZFP_SYMBOLIC");

  auto* verify = app.add_subcommand("verify-decomposition", "Check the Taylor coefficients of L mod p on a box");
  add_common(verify, opt);
  verify->add_option("--box", opt.box, "Box bound B: 0 <= k_i < B")->required()->envname("KZFP_BOX");
  verify->add_option("--depth", opt.depth, "Truncation depth a_max; needs B <= p^(a_max+1)")
      ->required()
      ->envname("KZFP_DEPTH");

  auto* slice = app.add_subcommand("slice", "Coefficient of t^i in the P-vector");
  add_common(slice, opt);
  slice->add_option("--index", opt.index, "t-power i")->required()->envname("KZFP_INDEX");

  auto* taylor = app.add_subcommand("taylor-l", "Exact Taylor coefficient L_k and its reduction mod p");
  add_common(taylor, opt);
  taylor->add_option("--k", opt.k, "Comma-separated k_3..k_{2g+1}")->required()->delimiter(',')->envname("KZFP_K");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) return run(sub->get_name(), opt);
  return kExitUsage;
}
