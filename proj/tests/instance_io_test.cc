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

#include "assortment/instance_io.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace assortment {
namespace {

using testing::P;
using testing::T;

constexpr const char* kMinimal = R"({
  "products": [{"id": "s1", "kind": "sponsored", "revenue": 6}],
  "positions": [{"slot": 1, "kind": "reserved"}],
  "weights": [{"product": "s1", "slot": 1, "w": 2}],
  "w0": 1,
  "valid_positions": {"s1": [1]}
})";

// Returns the error raised by parse_instance, or fails.
Error ParseError(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "expected an error for " << text;
  return Error(ErrorCode::kInvalidArgument, "");
}

std::string Edit(const std::function<void(nlohmann::json&)>& fn) {
  nlohmann::json doc = nlohmann::json::parse(kMinimal);
  fn(doc);
  return doc.dump();
}

TEST(ParseInstance, Minimal) {
  const Instance inst = parse_instance(kMinimal);
  EXPECT_EQ(inst.num_products(), 1u);
  EXPECT_EQ(inst.num_positions(), 1u);
  EXPECT_EQ(inst.weight(P(0), T(1)), 2.0);
  EXPECT_TRUE(inst.organic_constraint().is_unconstrained());
  EXPECT_EQ(parse_instance(serialize_instance(inst)), inst);
}

TEST(ParseInstance, RoundTripGenerated) {
  for (const char* family : {"none", "knapsack", "partition", "cardinality", "mixed"}) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const Instance inst = testing::RandomInstance(seed, {0, 6}, {0, 3}, {1, 7}, family);
      const std::string text = serialize_instance(inst);
      const Instance back = parse_instance(text);
      EXPECT_EQ(back, inst) << family << " seed " << seed;
      EXPECT_EQ(serialize_instance(back), text);
    }
  }
}

TEST(ParseInstance, RoundTripExplicitFamily) {
  InstanceBuilder b;
  const ProductId a = b.add_organic("a", 1);
  const ProductId c = b.add_organic("c", 2);
  b.add_position(PositionKind::kOrganic);
  b.set_weight(a, T(1), 0.5);
  b.set_constraint(ConstraintFamily(ExplicitFamily{{{}, {a}, {c}}}));
  const Instance inst = b.build();
  EXPECT_EQ(parse_instance(serialize_instance(inst)), inst);
}

TEST(ParseInstance, ValidationErrorsNameTheKey) {
  const Error unequal = ParseError(Edit([](auto& d) {
    d["positions"].push_back({{"slot", 2}, {"kind", "reserved"}});
  }));
  EXPECT_EQ(unequal.code(), ErrorCode::kValidationError);
  EXPECT_NE(std::string(unequal.what()).find("reserved slots"), std::string::npos);

  const Error organic_slot = ParseError(Edit([](auto& d) {
    d["products"].push_back({{"id", "o1"}, {"kind", "organic"}, {"revenue", 1}});
    d["positions"].push_back({{"slot", 2}, {"kind", "organic"}});
    d["valid_positions"]["s1"] = {1, 2};
  }));
  EXPECT_EQ(organic_slot.code(), ErrorCode::kValidationError);
  EXPECT_EQ(std::string(organic_slot.what()).rfind("valid_positions.s1", 0), 0u)
      << organic_slot.what();

  const Error missing_slot = ParseError(Edit([](auto& d) { d["valid_positions"]["s1"] = {3}; }));
  EXPECT_EQ(std::string(missing_slot.what()),
            "valid_positions.s1: references slot 3 not in positions");

  const Error empty = ParseError(Edit([](auto& d) { d["valid_positions"]["s1"] = nlohmann::json::array(); }));
  EXPECT_EQ(empty.code(), ErrorCode::kValidationError);

  const Error dup = ParseError(Edit([](auto& d) {
    d["weights"].push_back({{"product", "s1"}, {"slot", 1}, {"w", 3}});
  }));
  EXPECT_EQ(std::string(dup.what()).rfind("weights[1]", 0), 0u) << dup.what();

  const Error unknown = ParseError(Edit([](auto& d) {
    d["weights"][0]["product"] = "zz";
  }));
  EXPECT_EQ(std::string(unknown.what()), "weights[0].product: unknown product 'zz'");
}

TEST(ParseInstance, ParseErrorsNameTheKey) {
  const Error malformed = ParseError("{\"products\": [");
  EXPECT_EQ(malformed.code(), ErrorCode::kParseError);

  const Error typed = ParseError(Edit([](auto& d) { d["products"][0]["revenue"] = "six"; }));
  EXPECT_EQ(typed.code(), ErrorCode::kParseError);
  EXPECT_EQ(std::string(typed.what()), "products[0].revenue: expected a number");

  const Error extra = ParseError(Edit([](auto& d) { d["colour"] = 1; }));
  EXPECT_EQ(std::string(extra.what()), "colour: unknown key");

  const Error missing = ParseError(Edit([](auto& d) { d.erase("w0"); }));
  EXPECT_EQ(std::string(missing.what()), "w0: missing");

  const Error bad_type = ParseError(Edit([](auto& d) { d["constraint"] = {{"type", "matroid"}}; }));
  EXPECT_EQ(std::string(bad_type.what()), "constraint.type: unsupported type 'matroid'");
}

TEST(ParseInstance, ConstraintShapes) {
  auto with_organics = [](const nlohmann::json& constraint, bool costs) {
    return Edit([&](auto& d) {
      for (const char* id : {"o1", "o2"}) {
        nlohmann::json p = {{"id", id}, {"kind", "organic"}, {"revenue", 2}};
        if (costs) p["cost"] = 1.5;
        d["products"].push_back(p);
      }
      d["constraint"] = constraint;
    });
  };
  const Instance k = parse_instance(with_organics({{"type", "knapsack"}, {"capacity", 2}}, true));
  const auto& knap = std::get<KnapsackConstraint>(k.organic_constraint().variant());
  EXPECT_EQ(knap.cost, (std::vector<double>{0.0, 1.5, 1.5}));
  EXPECT_EQ(knap.capacity, 2.0);

  const Error no_cost = ParseError(with_organics({{"type", "knapsack"}, {"capacity", 2}}, false));
  EXPECT_EQ(std::string(no_cost.what()), "products[1].cost: required by a knapsack constraint");

  const Instance p = parse_instance(with_organics(
      {{"type", "partition"},
       {"groups", {{{"products", {"o1"}}, {"cap", 1}}, {{"products", {"o2"}}, {"cap", 0}}}}},
      false));
  const auto& part = std::get<PartitionMatroidConstraint>(p.organic_constraint().variant());
  EXPECT_EQ(part.group_of, (std::vector<int>{-1, 0, 1}));
  EXPECT_EQ(part.caps, (std::vector<int>{1, 0}));

  const Error ungrouped = ParseError(with_organics(
      {{"type", "partition"}, {"groups", {{{"products", {"o1"}}, {"cap", 1}}}}}, false));
  EXPECT_EQ(ungrouped.code(), ErrorCode::kValidationError);

  const Error sponsored_member = ParseError(with_organics(
      {{"type", "cardinality"}, {"max", -1}}, false));
  EXPECT_EQ(std::string(sponsored_member.what()), "constraint.max: must be nonnegative");

  const Error not_closed = ParseError(with_organics(
      {{"type", "explicit"}, {"sets", {nlohmann::json::array(), {"o1", "o2"}}}}, false));
  EXPECT_EQ(not_closed.code(), ErrorCode::kValidationError);
}

TEST(ParsePlacement, ReadsNamesAndSlots) {
  const Instance inst = parse_instance(kMinimal);
  const Placement pl = parse_placement(inst, R"({"placement": [{"slot": 1, "product": "s1"}]})");
  EXPECT_EQ(pl, Placement({{T(1), P(0)}}));
  try {
    parse_placement(inst, R"({"placement": [{"slot": 1, "product": "nope"}]})");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()), "placement[0].product: unknown product 'nope'");
  }
  // Out-of-range slots are left for check_feasible to report.
  const Placement far = parse_placement(inst, R"({"placement": [{"slot": 9, "product": "s1"}]})");
  EXPECT_FALSE(check_feasible(inst, far).ok());
}

TEST(Reports, ErrorAndVerdictShapes) {
  const Json err = error_to_json(ErrorCode::kBudgetExceeded, "too big");
  EXPECT_EQ(err.dump(), R"({"error":{"code":"BudgetExceeded","message":"too big"}})");

  const Instance inst = parse_instance(kMinimal);
  const Json v = verdict_to_json(inst, Placement{}, check_feasible(inst, Placement{}));
  EXPECT_FALSE(v["feasible"].get<bool>());
  EXPECT_EQ(v["violations"][0]["kind"], "sponsored_unplaced");
  EXPECT_EQ(v["violations"][0]["product"], "s1");
}

}  // namespace
}  // namespace assortment
