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

#include "assortment/generator.h"

#include <gtest/gtest.h>

#include <set>

#include "assortment/error.h"
#include "assortment/instance_io.h"
#include "assortment/oracle.h"

namespace assortment {
namespace {

ErrorCode ConfigCode(const std::string& text) {
  try {
    parse_generator_config(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

TEST(Rng, IntegerStaysInRange) {
  Rng rng(3);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t v = rng.integer(-2, 3);
    ASSERT_GE(v, -2);
    ASSERT_LE(v, 3);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_EQ(rng.integer(5, 5), 5);
}

TEST(Rng, DerivedSeedsDiffer) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(derive_seed(7, i));
  EXPECT_EQ(seeds.size(), 1000u);
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
  EXPECT_NE(derive_seed(7, 3), derive_seed(8, 3));
}

TEST(Generate, Deterministic) {
  GeneratorConfig cfg;
  cfg.n_organic = {0, 6};
  cfg.n_sponsored = {0, 3};
  cfg.k = {1, 7};
  cfg.constraint.type = "mixed";
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    cfg.seed = seed;
    EXPECT_EQ(serialize_instance(generate(cfg)), serialize_instance(generate(cfg)));
  }
}

TEST(Generate, RespectsRangesAndStructure) {
  GeneratorConfig cfg;
  cfg.n_organic = {1, 5};
  cfg.n_sponsored = {0, 3};
  cfg.k = {2, 6};
  for (const char* valid : {"full", "singleton", "random", "mixed"}) {
    for (const char* reserved : {"top", "bottom", "random"}) {
      cfg.valid = valid;
      cfg.reserved = reserved;
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        cfg.seed = seed;
        const Instance inst = generate(cfg);
        const std::size_t s = inst.sponsored().size();
        EXPECT_LE(s, 3u);
        EXPECT_GE(inst.organic().size(), 1u);
        EXPECT_LE(inst.organic().size(), 5u);
        EXPECT_GE(inst.num_positions(), std::max<std::size_t>(2, s));
        EXPECT_LE(inst.num_positions(), 6u);
        EXPECT_EQ(inst.reserved_positions().size(), s);
        if (std::string(reserved) == "top") {
          for (std::size_t j = 0; j < s; ++j) {
            EXPECT_EQ(inst.reserved_positions()[j].value, static_cast<int>(j) + 1);
          }
        }
        for (ProductId i : inst.sponsored()) {
          const auto& r = inst.valid_positions(i);
          EXPECT_FALSE(r.empty());
          if (std::string(valid) == "full") EXPECT_EQ(r.size(), s);
          if (std::string(valid) == "singleton") EXPECT_EQ(r.size(), 1u);
        }
        for (std::size_t j = 0; j < inst.num_products(); ++j) {
          const ProductId i{static_cast<std::int32_t>(j)};
          EXPECT_GE(inst.revenue(i), cfg.revenue_range.lo);
          EXPECT_LT(inst.revenue(i), cfg.revenue_range.hi);
        }
        // A sponsored bijection always exists.
        EXPECT_GT(count_sponsored_assignments(inst), 0u);
      }
    }
  }
}

TEST(Generate, NoSponsored) {
  GeneratorConfig cfg;
  cfg.n_sponsored = {0, 0};
  cfg.seed = 4;
  const Instance inst = generate(cfg);
  EXPECT_TRUE(inst.sponsored().empty());
  EXPECT_TRUE(inst.reserved_positions().empty());
  EXPECT_EQ(inst.organic_positions().size(), inst.num_positions());
}

TEST(Generate, UnitDecayIsPositionIndependent) {
  GeneratorConfig cfg;
  cfg.position_decay = 1.0;
  cfg.n_organic = {3, 3};
  cfg.n_sponsored = {2, 2};
  cfg.k = {5, 5};
  cfg.valid = "full";
  cfg.seed = 11;
  const Instance inst = generate(cfg);
  for (ProductId i : inst.organic()) {
    const double w = inst.weight(i, inst.organic_positions().front());
    for (PositionId t : inst.organic_positions()) EXPECT_EQ(inst.weight(i, t), w);
  }
  for (ProductId i : inst.sponsored()) {
    const double w = inst.weight(i, inst.reserved_positions().front());
    for (PositionId t : inst.reserved_positions()) EXPECT_EQ(inst.weight(i, t), w);
  }
}

TEST(Generate, ConstraintRecipes) {
  GeneratorConfig cfg;
  cfg.n_organic = {4, 4};
  for (const char* type : {"none", "knapsack", "partition", "cardinality"}) {
    cfg.constraint.type = type;
    const Instance inst = generate(cfg);
    EXPECT_EQ(inst.organic_constraint().type_name(), std::string(type));
  }
}

TEST(GeneratorConfig, JsonRoundTrip) {
  const GeneratorConfig cfg = parse_generator_config(R"({
    "seed": 5, "n_organic": [1, 3], "n_sponsored": 2, "k": [2, 4],
    "constraint": {"type": "partition", "groups": 3, "cap_max": 1}})");
  EXPECT_EQ(cfg.seed, 5u);
  EXPECT_EQ(cfg.n_sponsored.lo, 2);
  EXPECT_EQ(cfg.n_sponsored.hi, 2);
  EXPECT_EQ(cfg.constraint.groups, 3);
  const GeneratorConfig back = parse_generator_config(generator_config_to_json(cfg).dump());
  EXPECT_EQ(generator_config_to_json(back), generator_config_to_json(cfg));
}

TEST(GeneratorConfig, Errors) {
  EXPECT_EQ(ConfigCode("{"), ErrorCode::kParseError);
  EXPECT_EQ(ConfigCode(R"({"n_organic": [3, 1]})"), ErrorCode::kConfigError);
  EXPECT_EQ(ConfigCode(R"({"n_sponsored": [0, 5], "k": [1, 3]})"), ErrorCode::kConfigError);
  EXPECT_EQ(ConfigCode(R"({"weight_range": [-1, 2]})"), ErrorCode::kConfigError);
  EXPECT_EQ(ConfigCode(R"({"valid": "some"})"), ErrorCode::kConfigError);
  EXPECT_EQ(ConfigCode(R"({"constraint": {"type": "matroid"}})"), ErrorCode::kConfigError);
  EXPECT_EQ(ConfigCode(R"({"colour": 1})"), ErrorCode::kConfigError);
}

}  // namespace
}  // namespace assortment
