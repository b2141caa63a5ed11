// Copyright 2026 The Sponsored Assortment Authors
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

#include "assortment/exact_solver.h"

#include <gtest/gtest.h>

#include "assortment/error.h"
#include "assortment/oracle.h"
#include "test_util.h"

namespace assortment {
namespace {

using testing::P;
using testing::T;

Instance ForcedSponsored() {
  InstanceBuilder b;
  const ProductId s = b.add_sponsored("s", 6);
  b.add_position(PositionKind::kReserved);
  b.set_weight(s, T(1), 2).set_valid_positions(s, {T(1)});
  return b.build();
}

TEST(SolveExact, ForcedSponsored) {
  const ExactSolution sol = solve_exact(ForcedSponsored());
  EXPECT_EQ(sol.placement, Placement({{T(1), P(0)}}));
  EXPECT_NEAR(sol.revenue, 4.0, 1e-12);
  EXPECT_TRUE(sol.trace.converged);
}

TEST(SolveExact, SingleOrganic) {
  InstanceBuilder b;
  const ProductId a = b.add_organic("a", 10);
  b.add_position(PositionKind::kOrganic);
  b.set_weight(a, T(1), 1);
  const ExactSolution sol = solve_exact(b.build());
  EXPECT_NEAR(sol.revenue, 5.0, 1e-12);
}

TEST(SolveExact, EmptyInstance) {
  InstanceBuilder b;
  b.add_position(PositionKind::kOrganic);
  const ExactSolution sol = solve_exact(b.build());
  EXPECT_TRUE(sol.placement.empty());
  EXPECT_EQ(sol.revenue, 0.0);
}

TEST(SolveExact, InfeasibleSponsoredAssignment) {
  InstanceBuilder b;
  const ProductId s1 = b.add_sponsored("s1", 1);
  const ProductId s2 = b.add_sponsored("s2", 1);
  b.add_position(PositionKind::kReserved);
  b.add_position(PositionKind::kReserved);
  b.set_valid_positions(s1, {T(1)}).set_valid_positions(s2, {T(1)});
  const Instance inst = b.build();
  try {
    solve_exact(inst);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleSponsoredAssignment);
  }
}

TEST(SolveExact, MatchesOracleOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Instance inst = testing::RandomInstance(seed, {0, 5}, {0, 3}, {1, 5});
    const ExactSolution sol = solve_exact(inst);
    const OracleSolution best = oracle_p0(inst, OracleBudget{8, 6, 20});
    ASSERT_TRUE(check_feasible(inst, sol.placement).ok()) << "seed " << seed;
    EXPECT_NEAR(sol.revenue, best.revenue, 1e-9) << "seed " << seed;
    EXPECT_NEAR(sol.revenue, testing::NaiveRevenue(inst, sol.placement), 1e-12);
  }
}

TEST(SolveExact, ScalesWithRevenue) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = testing::RandomInstance(seed, {1, 6}, {0, 3}, {3, 7});
    const double base = solve_exact(inst).revenue;
    EXPECT_NEAR(solve_exact(inst.with_scaled_revenues(3.0)).revenue, 3.0 * base,
                1e-9 * std::max(1.0, base));
  }
}

TEST(SolveSponsoredOnly, Examples) {
  const ExactSolution forced = solve_sponsored_only(ForcedSponsored());
  EXPECT_NEAR(forced.revenue, 4.0, 1e-12);

  InstanceBuilder b;
  const ProductId s1 = b.add_sponsored("s1", 5);
  const ProductId s2 = b.add_sponsored("s2", 2);
  b.add_position(PositionKind::kReserved);
  b.add_position(PositionKind::kReserved);
  b.set_weight(s1, T(1), 3).set_weight(s1, T(2), 1);
  b.set_weight(s2, T(1), 2).set_weight(s2, T(2), 1);
  b.set_valid_positions(s1, {T(1), T(2)}).set_valid_positions(s2, {T(1), T(2)});
  const Instance inst = b.build();
  // (s1@1, s2@2): (15 + 2) / 5;  (s1@2, s2@1): (5 + 4) / 4.
  const double expected = std::max(17.0 / 5.0, 9.0 / 4.0);
  EXPECT_NEAR(solve_sponsored_only(inst).revenue, expected, 1e-12);
}

TEST(SolveSponsoredOnly, EqualsExactWithoutOrganics) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance inst = testing::RandomInstance(seed, {1, 5}, {0, 3}, {2, 5});
    const ExactSolution a = solve_sponsored_only(inst);
    const ExactSolution b = solve_exact(inst.without_organics());
    EXPECT_NEAR(a.revenue, b.revenue, 1e-12) << "seed " << seed;
    EXPECT_TRUE(organic_products(inst, a.placement).empty());
  }
}

TEST(InnerParametricStep, SignCases) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Instance inst = testing::RandomInstance(seed, {1, 5}, {0, 2}, {2, 5});
    const ParametricStep zero = inner_parametric_step(inst, 0.0);
    // Every organic slot that can earn revenue is filled at lambda = 0.
    EXPECT_GE(zero.inner_value, 0.0);
    double max_revenue = 0.0;
    for (std::size_t i = 0; i < inst.num_products(); ++i) {
      max_revenue = std::max(max_revenue, inst.revenue(P(static_cast<int>(i))));
    }
    const ParametricStep high = inner_parametric_step(inst, max_revenue + 1.0);
    EXPECT_TRUE(organic_products(inst, high.placement).empty());
    EXPECT_LT(high.inner_value, 0.0);

    const double opt = oracle_p0(inst, OracleBudget{8, 6, 20}).revenue;
    EXPECT_NEAR(inner_parametric_step(inst, opt).inner_value, 0.0, 1e-9)
        << "seed " << seed;
  }
}

TEST(InnerParametricStep, RejectsNegativeLambda) {
  try {
    inner_parametric_step(ForcedSponsored(), -1.0);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

}  // namespace
}  // namespace assortment
