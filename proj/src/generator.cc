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

#include <algorithm>
#include <cmath>
#include <limits>

#include "assortment/error.h"

namespace assortment {
namespace {

[[noreturn]] void Bad(const std::string& key, const std::string& msg) {
  throw Error(ErrorCode::kConfigError, key + ": " + msg);
}

using RawJson = nlohmann::json;

bool OneOf(const std::string& s, std::initializer_list<std::string_view> options) {
  return std::find(options.begin(), options.end(), s) != options.end();
}

IntRange ReadIntRange(const RawJson& j, const std::string& key) {
  auto as_int = [&](const RawJson& x) {
    if (!x.is_number_integer()) Bad(key, "expected an integer or [lo, hi]");
    const auto v = x.get<std::int64_t>();
    if (v < 0 || v > 1000) Bad(key, "out of range");
    return static_cast<int>(v);
  };
  if (j.is_array()) {
    if (j.size() != 2) Bad(key, "expected [lo, hi]");
    return {as_int(j[0]), as_int(j[1])};
  }
  const int v = as_int(j);
  return {v, v};
}

RealRange ReadRealRange(const RawJson& j, const std::string& key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    Bad(key, "expected [lo, hi]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

double ReadReal(const RawJson& j, const std::string& key) {
  if (!j.is_number()) Bad(key, "expected a number");
  return j.get<double>();
}

int ReadInt(const RawJson& j, const std::string& key) {
  if (!j.is_number_integer()) Bad(key, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    Bad(key, "out of range");
  }
  return static_cast<int>(v);
}

std::string ReadString(const RawJson& j, const std::string& key) {
  if (!j.is_string()) Bad(key, "expected a string");
  return j.get<std::string>();
}

void CheckRange(const RealRange& r, const std::string& key, bool positive) {
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi) {
    Bad(key, "need finite lo <= hi");
  }
  if (positive ? !(r.lo > 0.0) : r.lo < 0.0) {
    Bad(key, positive ? "must be positive" : "must be nonnegative");
  }
}

nlohmann::ordered_json RangeJson(const IntRange& r) {
  if (r.lo == r.hi) return r.lo;
  return {r.lo, r.hi};
}

}  // namespace

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return lo;
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the result exactly uniform.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void validate_config(const GeneratorConfig& cfg) {
  auto check_int = [](const IntRange& r, const char* key) {
    if (r.lo < 0 || r.lo > r.hi) Bad(key, "need 0 <= lo <= hi");
  };
  check_int(cfg.n_organic, "n_organic");
  check_int(cfg.n_sponsored, "n_sponsored");
  check_int(cfg.k, "k");
  if (cfg.k.hi < 1) Bad("k", "need at least one slot");
  if (cfg.n_sponsored.hi > cfg.k.hi) {
    Bad("n_sponsored", "upper bound exceeds the upper bound of k");
  }
  CheckRange(cfg.revenue_range, "revenue_range", false);
  CheckRange(cfg.weight_range, "weight_range", true);
  if (!(cfg.position_decay > 0.0 && cfg.position_decay <= 1.0)) {
    Bad("position_decay", "must lie in (0, 1]");
  }
  if (!(cfg.noise >= 0.0 && cfg.noise < 1.0)) Bad("noise", "must lie in [0, 1)");
  if (!(cfg.w0 > 0.0) || !std::isfinite(cfg.w0)) Bad("w0", "must be positive");
  if (!OneOf(cfg.reserved, {"top", "bottom", "random"})) {
    Bad("reserved", "expected top, bottom or random");
  }
  if (!OneOf(cfg.valid, {"full", "singleton", "random", "mixed"})) {
    Bad("valid", "expected full, singleton, random or mixed");
  }
  const ConstraintRecipe& c = cfg.constraint;
  if (!OneOf(c.type, {"none", "knapsack", "partition", "cardinality", "mixed"})) {
    Bad("constraint.type", "expected none, knapsack, partition, cardinality or mixed");
  }
  CheckRange(c.cost_range, "constraint.cost_range", true);
  if (!(c.capacity_fraction >= 0.0 && c.capacity_fraction <= 1.0)) {
    Bad("constraint.capacity_fraction", "must lie in [0, 1]");
  }
  if (c.groups < 1) Bad("constraint.groups", "must be at least 1");
  if (c.cap_max < 1) Bad("constraint.cap_max", "must be at least 1");
  if (c.max < 0) Bad("constraint.max", "must be nonnegative");
}

GeneratorConfig generator_config_from_json(
    const RawJson& doc, std::initializer_list<std::string_view> extra_keys) {
  if (!doc.is_object()) Bad("config", "expected an object");
  GeneratorConfig cfg;
  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    const RawJson& v = item.value();
    if (key == "seed") {
      if (!v.is_number_unsigned()) Bad(key, "expected a nonnegative integer");
      cfg.seed = v.get<std::uint64_t>();
    } else if (key == "n_organic") {
      cfg.n_organic = ReadIntRange(v, key);
    } else if (key == "n_sponsored") {
      cfg.n_sponsored = ReadIntRange(v, key);
    } else if (key == "k") {
      cfg.k = ReadIntRange(v, key);
    } else if (key == "revenue_range") {
      cfg.revenue_range = ReadRealRange(v, key);
    } else if (key == "weight_range") {
      cfg.weight_range = ReadRealRange(v, key);
    } else if (key == "position_decay") {
      cfg.position_decay = ReadReal(v, key);
    } else if (key == "noise") {
      cfg.noise = ReadReal(v, key);
    } else if (key == "w0") {
      cfg.w0 = ReadReal(v, key);
    } else if (key == "reserved") {
      cfg.reserved = ReadString(v, key);
    } else if (key == "valid") {
      cfg.valid = ReadString(v, key);
    } else if (key == "constraint") {
      if (!v.is_object()) Bad(key, "expected an object");
      for (const auto& c : v.items()) {
        const std::string ckey = "constraint." + c.key();
        if (c.key() == "type") {
          cfg.constraint.type = ReadString(c.value(), ckey);
        } else if (c.key() == "cost_range") {
          cfg.constraint.cost_range = ReadRealRange(c.value(), ckey);
        } else if (c.key() == "capacity_fraction") {
          cfg.constraint.capacity_fraction = ReadReal(c.value(), ckey);
        } else if (c.key() == "groups") {
          cfg.constraint.groups = ReadInt(c.value(), ckey);
        } else if (c.key() == "cap_max") {
          cfg.constraint.cap_max = ReadInt(c.value(), ckey);
        } else if (c.key() == "max") {
          cfg.constraint.max = ReadInt(c.value(), ckey);
        } else {
          Bad(ckey, "unknown key");
        }
      }
    } else if (std::find(extra_keys.begin(), extra_keys.end(), key) ==
               extra_keys.end()) {
      Bad(key, "unknown key");
    }
  }
  validate_config(cfg);
  return cfg;
}

GeneratorConfig parse_generator_config(std::string_view text) {
  RawJson doc;
  try {
    doc = RawJson::parse(text.begin(), text.end());
  } catch (const RawJson::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                std::string("config: malformed JSON (") + e.what() + ")");
  }
  return generator_config_from_json(doc);
}

nlohmann::ordered_json generator_config_to_json(const GeneratorConfig& cfg) {
  const ConstraintRecipe& c = cfg.constraint;
  return {{"seed", cfg.seed},
          {"n_organic", RangeJson(cfg.n_organic)},
          {"n_sponsored", RangeJson(cfg.n_sponsored)},
          {"k", RangeJson(cfg.k)},
          {"revenue_range", {cfg.revenue_range.lo, cfg.revenue_range.hi}},
          {"weight_range", {cfg.weight_range.lo, cfg.weight_range.hi}},
          {"position_decay", cfg.position_decay},
          {"noise", cfg.noise},
          {"w0", cfg.w0},
          {"reserved", cfg.reserved},
          {"valid", cfg.valid},
          {"constraint",
           {{"type", c.type},
            {"cost_range", {c.cost_range.lo, c.cost_range.hi}},
            {"capacity_fraction", c.capacity_fraction},
            {"groups", c.groups},
            {"cap_max", c.cap_max},
            {"max", c.max}}}};
}

Instance generate(const GeneratorConfig& cfg) {
  validate_config(cfg);
  Rng rng(cfg.seed);

  const int s = static_cast<int>(rng.integer(cfg.n_sponsored.lo, cfg.n_sponsored.hi));
  const int o = static_cast<int>(rng.integer(cfg.n_organic.lo, cfg.n_organic.hi));
  const int k = static_cast<int>(
      rng.integer(std::max({cfg.k.lo, s, 1}), cfg.k.hi));

  std::vector<int> slots(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) slots[static_cast<std::size_t>(t)] = t + 1;
  std::vector<int> reserved;
  if (cfg.reserved == "top") {
    reserved.assign(slots.begin(), slots.begin() + s);
  } else if (cfg.reserved == "bottom") {
    reserved.assign(slots.end() - s, slots.end());
  } else {
    std::vector<int> pick = slots;
    rng.shuffle(pick);
    reserved.assign(pick.begin(), pick.begin() + s);
    std::sort(reserved.begin(), reserved.end());
  }

  InstanceBuilder b;
  std::vector<PositionId> organic_slots;
  std::vector<PositionId> reserved_slots;
  for (int t = 1; t <= k; ++t) {
    const bool is_reserved =
        std::find(reserved.begin(), reserved.end(), t) != reserved.end();
    const PositionId id =
        b.add_position(is_reserved ? PositionKind::kReserved : PositionKind::kOrganic);
    (is_reserved ? reserved_slots : organic_slots).push_back(id);
  }

  auto weight_at = [&](double base, PositionId t) {
    double w = base * std::pow(cfg.position_decay, t.value - 1);
    if (cfg.noise > 0.0) w *= 1.0 + cfg.noise * (2.0 * rng.uniform01() - 1.0);
    return w;
  };

  std::vector<ProductId> organic;
  for (int i = 1; i <= o; ++i) {
    const ProductId id = b.add_organic(
        "o" + std::to_string(i),
        rng.uniform(cfg.revenue_range.lo, cfg.revenue_range.hi));
    const double base = rng.uniform(cfg.weight_range.lo, cfg.weight_range.hi);
    for (PositionId t : organic_slots) b.set_weight(id, t, weight_at(base, t));
    organic.push_back(id);
  }

  // A random bijection onto the reserved slots is always kept, so every
  // pattern admits a feasible sponsored assignment.
  std::vector<PositionId> bijection = reserved_slots;
  rng.shuffle(bijection);
  for (int a = 0; a < s; ++a) {
    const ProductId id = b.add_sponsored(
        "s" + std::to_string(a + 1),
        rng.uniform(cfg.revenue_range.lo, cfg.revenue_range.hi));
    const double base = rng.uniform(cfg.weight_range.lo, cfg.weight_range.hi);
    for (PositionId t : reserved_slots) b.set_weight(id, t, weight_at(base, t));

    std::string pattern = cfg.valid;
    if (pattern == "mixed") {
      static constexpr const char* kPatterns[] = {"full", "singleton", "random"};
      pattern = kPatterns[rng.integer(0, 2)];
    }
    const PositionId own = bijection[static_cast<std::size_t>(a)];
    std::vector<PositionId> valid;
    for (PositionId t : reserved_slots) {
      if (t == own || pattern == "full" ||
          (pattern == "random" && rng.bernoulli(0.5))) {
        valid.push_back(t);
      }
    }
    b.set_valid_positions(id, std::move(valid));
  }
  b.set_no_purchase_weight(cfg.w0);

  const std::size_t n = static_cast<std::size_t>(o + s);
  std::string type = cfg.constraint.type;
  if (type == "mixed") type = rng.bernoulli(0.5) ? "knapsack" : "partition";
  if (type == "knapsack") {
    KnapsackConstraint c;
    c.cost.assign(n, 0.0);
    double total = 0.0;
    for (ProductId i : organic) {
      const double cost = rng.uniform(cfg.constraint.cost_range.lo,
                                      cfg.constraint.cost_range.hi);
      c.cost[static_cast<std::size_t>(i.value)] = cost;
      total += cost;
    }
    c.capacity = cfg.constraint.capacity_fraction * total;
    b.set_constraint(ConstraintFamily(std::move(c)));
  } else if (type == "partition") {
    PartitionMatroidConstraint c;
    c.group_of.assign(n, -1);
    for (int g = 0; g < cfg.constraint.groups; ++g) {
      c.caps.push_back(static_cast<int>(rng.integer(1, cfg.constraint.cap_max)));
    }
    for (ProductId i : organic) {
      c.group_of[static_cast<std::size_t>(i.value)] =
          static_cast<int>(rng.integer(0, cfg.constraint.groups - 1));
    }
    b.set_constraint(ConstraintFamily(std::move(c)));
  } else if (type == "cardinality") {
    b.set_constraint(ConstraintFamily(CardinalityConstraint{cfg.constraint.max}));
  }

  try {
    return b.build();
  } catch (const Error& e) {
    Bad("config", std::string("generated instance is invalid: ") + e.what());
  }
}

}  // namespace assortment
