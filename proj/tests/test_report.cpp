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

#include <gtest/gtest.h>

#include "kzfp/report.hpp"

namespace kzfp {
namespace {

TEST(Report, VerdictSchema) {
  const PrimeContext c(5, 1);
  const FpSolutions sols(c);
  const auto j = verdict_json(verify_kz(sols.solution_I(0), c), c.points());
  EXPECT_TRUE(j.at("constraint_sum_zero").get<bool>());
  ASSERT_EQ(j.at("equations").size(), 3u);
  for (const auto& e : j.at("equations")) {
    EXPECT_TRUE(e.at("pass").get<bool>());
    EXPECT_EQ(e.at("residual").get<std::string>(), "0");
    EXPECT_TRUE(e.at("i").is_number_integer());
  }
}

TEST(Report, ResidualString) {
  const FpRing ring(5);
  FpVector v(3, FpPoly(ring, 3));
  v[1] = FpPoly::variable(ring, 3, 2).scaled(2);
  EXPECT_EQ(vector_residual_string(v, z_names(3)), "c2: 2*z3");
}

TEST(Report, Solve) {
  const Report r = solve_report(PrimeContext(5, 1), TermBudget{});
  EXPECT_TRUE(r.pass);
  const auto& I = r.json.at("solutions").at("0").at("I");
  EXPECT_TRUE(I.at("pass").get<bool>());
  EXPECT_EQ(I.at("vector").at(0).get<std::string>(), "4*z1 + 3*z2 + 3*z3");
  EXPECT_EQ(I.at("homogeneity").get<std::string>(), "homogeneous of degree 1");
}

TEST(Report, DeterministicAcrossJobs) {
  const PrimeContext c(5, 2);
  EXPECT_EQ(dump(solve_report(c, TermBudget{}, 1).json), dump(solve_report(c, TermBudget{}, 2).json));
  EXPECT_EQ(dump(decomposition_report(c, 25, 1, 1).json), dump(decomposition_report(c, 25, 1, 4).json));
}

TEST(Report, Cartier) {
  const PrimeContext c(3, 1);
  EXPECT_EQ(cartier_symbolic_report(c).json.at("matrix").at(0).at(0).get<std::string>(), "2 + 2*l3");
  const std::vector<std::int64_t> lam{1};
  EXPECT_EQ(cartier_numeric_report(c, lam).json.at("matrix"), nlohmann::json::parse("[[1]]"));
}

TEST(Report, Decomposition) {
  const Report r = decomposition_report(PrimeContext(5, 1), 25, 1);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.json.at("tuples_checked").get<int>(), 25);
  EXPECT_TRUE(r.json.at("failures").empty());
  EXPECT_THROW(decomposition_report(PrimeContext(5, 1), 26, 1), InvalidArgument);
}

TEST(Report, TaylorL) {
  const std::vector<std::uint64_t> k{0};
  const Report r = taylor_l_report(PrimeContext(5, 1), k);
  EXPECT_EQ(r.json.at("exact"), nlohmann::json::parse(R"(["1/2^1", "-1", "1/2^1"])"));
  EXPECT_EQ(r.json.at("mod_p"), nlohmann::json::parse("[3, 4, 3]"));
}

TEST(Report, SliceBeyondBound) {
  const Report r = taylor_slice_report(PrimeContext(5, 1), 100, TermBudget{});
  EXPECT_TRUE(r.json.at("beyond_degree_bound").get<bool>());
  EXPECT_EQ(r.json.at("vector").at(0).get<std::string>(), "0");
}

}  // namespace
}  // namespace kzfp
