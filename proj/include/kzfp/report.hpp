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

// JSON reports behind the CLI subcommands. Objects use std::map keys, so
// dumps are sorted and stable across runs and job counts.

#ifndef KZFP_REPORT_HPP
#define KZFP_REPORT_HPP

#include <cstdint>
#include <span>
#include <string>

#include "json.hpp"
#include "kzfp/arith.hpp"
#include "kzfp/decomposition.hpp"
#include "kzfp/error.hpp"
#include "kzfp/kz_core.hpp"

namespace kzfp {

struct Report {
  nlohmann::json json;
  bool pass = false;
};

/// {"constraint_sum_zero", "equations": [{"i", "pass", "residual"}]}
nlohmann::json verdict_json(const KzVerdict& verdict, unsigned points);

/// "c<k>: poly" for every nonzero coordinate joined by "; ", or "0".
std::string vector_residual_string(const FpVector& v, std::span<const std::string> names);

nlohmann::json vector_json(const FpVector& v, std::span<const std::string> names);

std::string homogeneity_string(const FpVector& v);

Report solve_report(const PrimeContext& ctx, const TermBudget& budget, unsigned jobs = 1);

Report cartier_numeric_report(const PrimeContext& ctx, std::span<const std::int64_t> lambda);

Report cartier_symbolic_report(const PrimeContext& ctx);

/// The box volume counts against the budget like stored terms do.
Report decomposition_report(const PrimeContext& ctx, std::uint64_t box, unsigned depth, unsigned jobs = 1,
                            const TermBudget& budget = TermBudget{});

Report taylor_slice_report(const PrimeContext& ctx, std::uint64_t index, const TermBudget& budget);

Report taylor_l_report(const PrimeContext& ctx, std::span<const std::uint64_t> k);

std::string dump(const nlohmann::json& j);

}  // namespace kzfp

#endif  // KZFP_REPORT_HPP
