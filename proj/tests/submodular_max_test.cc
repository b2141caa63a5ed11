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

#include "assortment/submodular_max.h"

#include <gtest/gtest.h>

#include <map>

#include "assortment/error.h"
#include "test_util.h"

namespace assortment {
namespace {

using testing::P;
using testing::T;

// Independent feasibility: one element per slot plus the product-level
// family of the instance.
bool NaiveAdmits(const Instance& inst, const ElementSet& u) {
  std::map<int, int> per_slot;
  for (const Element& e : u.elements()) {
    if (++per_slot[e.position.value] > 1) return false;
  }
  return inst.organic_constraint().admits(u.products());
}

// min{h(X), r} with h from exhaustive subsets.
double NaiveSurrogate(const Instance& inst, const ElementSet& x, double r) {
  return std::min(testing::NaiveBestSubset(inst, x), r);
}

double NaiveOptimum(const Instance& inst, const ElementSet& ground, double r) {
  const auto& el = ground.elements();
  double best = 0.0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << el.size()); ++mask) {
    std::vector<Element> chosen;
    for (std::size_t b = 0; b < el.size(); ++b) {
      if (mask >> b & 1) chosen.push_back(el[b]);
    }
    const ElementSet x(chosen, ground.w0_prime());
    if (!NaiveAdmits(inst, x)) continue;
    best = std::max(best, NaiveSurrogate(inst, x, r));
  }
  return best;
}

TEST(Maximize, EmptyGround) {
  const Instance inst = testing::RandomInstance(1, {2, 2}, {0, 0}, {2, 2});
  const auto sys = FeasibilitySystem::from_instance(inst);
  const MaximizerResult res = maximize(inst, ElementSet(1.0), {5.0}, sys);
  EXPECT_TRUE(res.chosen.empty());
  EXPECT_EQ(res.value, 0.0);
}

TEST(Maximize, SingleElement) {
  InstanceBuilder b;
  const ProductId a = b.add_organic("a", 4);
  b.add_position(PositionKind::kOrganic);
  b.set_weight(a, T(1), 1);
  const Instance inst = b.build();
  const auto sys = FeasibilitySystem::from_instance(inst);
  const ElementSet ground = ground_set(inst, 1.0);
  const MaximizerResult res = maximize(inst, ground, {10.0}, sys);
  EXPECT_EQ(res.chosen, ground);
  EXPECT_DOUBLE_EQ(res.value, 2.0);
  // A zero threshold makes every gain zero, so nothing is picked.
  EXPECT_TRUE(maximize(inst, ground, {0.0}, sys).chosen.empty());
}

TEST(GuaranteeFor, Systems) {
  EXPECT_DOUBLE_EQ(guarantee_for(FeasibilitySystem{}), 0.5);
  EXPECT_DOUBLE_EQ(guarantee_for(FeasibilitySystem{PartitionSystem{}}), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(guarantee_for(FeasibilitySystem{KnapsackSystem{}}), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(guarantee_for(FeasibilitySystem{ExplicitSystem{}}), 0.5);
}

struct Case {
  const char* constraint;
};

class MaximizeVersusOracle : public ::testing::TestWithParam<Case> {};

TEST_P(MaximizeVersusOracle, FeasibleAndWithinGuarantee) {
  Rng rng(std::hash<std::string>{}(GetParam().constraint) & 0xffff);
  for (int iter = 0; iter < 150; ++iter) {
    const Instance inst = testing::RandomInstance(
        rng.next(), {1, 4}, {0, 0}, {1, 3}, GetParam().constraint);
    const auto sys = FeasibilitySystem::from_instance(inst);
    const double w0p = rng.uniform(0.5, 3.0);
    const ElementSet ground = ground_set(inst, w0p);
    ASSERT_LE(ground.size(), 14u);
    const double r = rng.uniform(0.5, 10.0);
    for (bool local : {false, true}) {
      MaximizerOptions options;
      options.local_search = local;
      const MaximizerResult res = maximize(inst, ground, {r}, sys, options);
      ASSERT_TRUE(NaiveAdmits(inst, res.chosen)) << "iteration " << iter;
      EXPECT_NEAR(res.value, NaiveSurrogate(inst, res.chosen, r), 1e-9);
      const double opt = NaiveOptimum(inst, ground, r);
      EXPECT_GE(res.value, res.guarantee_beta * opt - 1e-9) << "iteration " << iter;
      const MaximizerResult brute = brute_force_maximize(inst, ground, {r}, sys);
      EXPECT_NEAR(brute.value, opt, 1e-9);
      EXPECT_GE(brute.value, res.value - 1e-9);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Families, MaximizeVersusOracle,
                         ::testing::Values(Case{"none"}, Case{"knapsack"},
                                           Case{"partition"}, Case{"cardinality"}));

TEST(Maximize, ExplicitFamily) {
  InstanceBuilder b;
  const ProductId a = b.add_organic("a", 9);
  const ProductId c = b.add_organic("c", 8);
  const ProductId d = b.add_organic("d", 1);
  b.add_position(PositionKind::kOrganic);
  b.add_position(PositionKind::kOrganic);
  for (ProductId i : {a, c, d}) b.set_weight(i, T(1), 1).set_weight(i, T(2), 0.5);
  // a and c never together.
  b.set_constraint(ConstraintFamily(ExplicitFamily{{{}, {a}, {c}, {d}, {a, d}, {c, d}}}));
  const Instance inst = b.build();
  const auto sys = FeasibilitySystem::from_instance(inst);
  const ElementSet ground = ground_set(inst, 1.0);
  const MaximizerResult res = maximize(inst, ground, {100.0}, sys);
  EXPECT_TRUE(NaiveAdmits(inst, res.chosen));
  EXPECT_NEAR(res.value, NaiveOptimum(inst, ground, 100.0), 1e-12);
}

TEST(BruteForceMaximize, RejectsLargeGround) {
  const Instance inst = testing::RandomInstance(3, {7, 7}, {0, 0}, {3, 3});
  const ElementSet ground = ground_set(inst, 1.0);
  ASSERT_GT(ground.size(), kBruteForceMaxElements);
  try {
    brute_force_maximize(inst, ground, {1.0}, FeasibilitySystem{});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGroundSetTooLarge);
  }
}

TEST(SurrogateFunction, MonotoneAndSubmodular) {
  Rng rng(4242);
  int triples = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const Instance inst = testing::RandomInstance(rng.next(), {2, 5}, {0, 0}, {2, 4});
    const double w0p = rng.uniform(0.3, 3.0);
    const ElementSet ground = ground_set(inst, w0p);
    double r = std::numeric_limits<double>::infinity();
    for (ProductId i : inst.organic()) r = std::min(r, inst.revenue(i));
    const SurrogateObjective obj{r};
    for (int rep = 0; rep < 5; ++rep) {
      ElementSet x(w0p), y(w0p);
      std::vector<Element> outside;
      for (const Element& e : ground.elements()) {
        const double u = rng.uniform01();
        if (u < 0.25) {
          x.insert(e);
          y.insert(e);
        } else if (u < 0.5) {
          y.insert(e);
        } else {
          outside.push_back(e);
        }
      }
      if (outside.empty()) continue;
      const Element e = outside[static_cast<std::size_t>(rng.integer(0, outside.size() - 1))];
      const double gx = surrogate_value(inst, x, obj);
      const double gy = surrogate_value(inst, y, obj);
      const double gain_x = surrogate_value(inst, x.with(e), obj) - gx;
      const double gain_y = surrogate_value(inst, y.with(e), obj) - gy;
      EXPECT_GE(gy, gx - 1e-9);
      EXPECT_GE(gain_x, -1e-9);
      EXPECT_GE(gain_x, gain_y - 1e-9);
      ++triples;
    }
  }
  EXPECT_GT(triples, 1000);
}

}  // namespace
}  // namespace assortment
