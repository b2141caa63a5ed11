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

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace assortment {
namespace {

using RawJson = nlohmann::json;

[[noreturn]] void ParseFail(const std::string& key, const std::string& msg) {
  throw Error(ErrorCode::kParseError, key + ": " + msg);
}

[[noreturn]] void Invalid(const std::string& key, const std::string& msg) {
  throw Error(ErrorCode::kValidationError, key + ": " + msg);
}

std::string Join(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

std::string At(const std::string& parent, std::size_t index) {
  return parent + "[" + std::to_string(index) + "]";
}

void RequireObject(const RawJson& j, const std::string& key) {
  if (!j.is_object()) ParseFail(key, "expected an object");
}

void RequireArray(const RawJson& j, const std::string& key) {
  if (!j.is_array()) ParseFail(key, "expected an array");
}

void RejectUnknownKeys(const RawJson& obj, const std::string& path,
                       std::initializer_list<std::string_view> allowed) {
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      ParseFail(Join(path, item.key()), "unknown key");
    }
  }
}

const RawJson& Member(const RawJson& obj, const std::string& path,
                      const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) ParseFail(Join(path, key), "missing");
  return *it;
}

double Number(const RawJson& j, const std::string& key) {
  if (!j.is_number()) ParseFail(key, "expected a number");
  return j.get<double>();
}

std::int64_t Integer(const RawJson& j, const std::string& key) {
  if (!j.is_number_integer()) ParseFail(key, "expected an integer");
  return j.get<std::int64_t>();
}

std::string String(const RawJson& j, const std::string& key) {
  if (!j.is_string()) ParseFail(key, "expected a string");
  return j.get<std::string>();
}

RawJson ParseText(std::string_view text, const std::string& what) {
  try {
    return RawJson::parse(text.begin(), text.end());
  } catch (const RawJson::parse_error& e) {
    ParseFail(what, std::string("malformed JSON (") + e.what() + ")");
  }
}

class NameIndex {
 public:
  void add(const std::string& name, ProductId id) { ids_.emplace(name, id); }
  ProductId lookup(const std::string& name, const std::string& key) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) Invalid(key, "unknown product '" + name + "'");
    return it->second;
  }

 private:
  std::map<std::string, ProductId> ids_;
};

struct ParsedProduct {
  std::string name;
  ProductKind kind;
  std::optional<double> cost;
};

ConstraintFamily ParseConstraint(const RawJson& j,
                                 const std::vector<ParsedProduct>& products,
                                 const NameIndex& names) {
  const std::string path = "constraint";
  RequireObject(j, path);
  const std::string type = String(Member(j, path, "type"), "constraint.type");
  const std::size_t n = products.size();

  auto organic_id = [&](const RawJson& item, const std::string& key) {
    const ProductId id = names.lookup(String(item, key), key);
    if (products[static_cast<std::size_t>(id.value)].kind !=
        ProductKind::kOrganic) {
      Invalid(key, "product '" + item.get<std::string>() + "' is sponsored");
    }
    return id;
  };

  if (type == "none") {
    RejectUnknownKeys(j, path, {"type"});
    return ConstraintFamily(Unconstrained{});
  }
  if (type == "knapsack") {
    RejectUnknownKeys(j, path, {"type", "capacity"});
    KnapsackConstraint k;
    k.capacity = Number(Member(j, path, "capacity"), "constraint.capacity");
    k.cost.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (products[i].kind != ProductKind::kOrganic) continue;
      if (!products[i].cost) {
        Invalid(At("products", i) + ".cost", "required by a knapsack constraint");
      }
      k.cost[i] = *products[i].cost;
    }
    return ConstraintFamily(std::move(k));
  }
  if (type == "partition") {
    RejectUnknownKeys(j, path, {"type", "groups"});
    const RawJson& groups = Member(j, path, "groups");
    RequireArray(groups, "constraint.groups");
    PartitionMatroidConstraint p;
    p.group_of.assign(n, -1);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const std::string gkey = At("constraint.groups", g);
      RequireObject(groups[g], gkey);
      RejectUnknownKeys(groups[g], gkey, {"products", "cap"});
      const std::int64_t cap = Integer(Member(groups[g], gkey, "cap"), gkey + ".cap");
      if (cap < 0) Invalid(gkey + ".cap", "must be nonnegative");
      p.caps.push_back(static_cast<int>(cap));
      const RawJson& members = Member(groups[g], gkey, "products");
      RequireArray(members, gkey + ".products");
      for (std::size_t m = 0; m < members.size(); ++m) {
        const std::string mkey = At(gkey + ".products", m);
        const ProductId id = organic_id(members[m], mkey);
        int& slot = p.group_of[static_cast<std::size_t>(id.value)];
        if (slot != -1) Invalid(mkey, "product listed in two groups");
        slot = static_cast<int>(g);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (products[i].kind == ProductKind::kOrganic && p.group_of[i] == -1) {
        Invalid("constraint.groups",
                "organic product '" + products[i].name + "' is in no group");
      }
    }
    return ConstraintFamily(std::move(p));
  }
  if (type == "cardinality") {
    RejectUnknownKeys(j, path, {"type", "max"});
    const std::int64_t max = Integer(Member(j, path, "max"), "constraint.max");
    if (max < 0) Invalid("constraint.max", "must be nonnegative");
    return ConstraintFamily(CardinalityConstraint{static_cast<int>(max)});
  }
  if (type == "explicit") {
    RejectUnknownKeys(j, path, {"type", "sets"});
    const RawJson& sets = Member(j, path, "sets");
    RequireArray(sets, "constraint.sets");
    ExplicitFamily e;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      const std::string skey = At("constraint.sets", s);
      RequireArray(sets[s], skey);
      std::vector<ProductId> set;
      for (std::size_t m = 0; m < sets[s].size(); ++m) {
        set.push_back(organic_id(sets[s][m], At(skey, m)));
      }
      e.sets.push_back(std::move(set));
    }
    ConstraintFamily family(std::move(e));
    if (!family.is_downward_closed()) {
      Invalid("constraint.sets", "family must contain [] and be closed under subsets");
    }
    return family;
  }
  Invalid("constraint.type", "unsupported type '" + type + "'");
}

Json ConstraintToJson(const Instance& inst) {
  struct Visitor {
    const Instance& inst;
    std::string name(int i) const {
      return inst.product(ProductId{i}).name;
    }
    Json operator()(const Unconstrained&) const { return {{"type", "none"}}; }
    Json operator()(const KnapsackConstraint& k) const {
      return {{"type", "knapsack"}, {"capacity", k.capacity}};
    }
    Json operator()(const PartitionMatroidConstraint& p) const {
      Json groups = Json::array();
      for (std::size_t g = 0; g < p.caps.size(); ++g) {
        Json members = Json::array();
        for (std::size_t i = 0; i < p.group_of.size(); ++i) {
          if (p.group_of[i] == static_cast<int>(g)) {
            members.push_back(name(static_cast<int>(i)));
          }
        }
        groups.push_back({{"products", members}, {"cap", p.caps[g]}});
      }
      return {{"type", "partition"}, {"groups", groups}};
    }
    Json operator()(const CardinalityConstraint& c) const {
      return {{"type", "cardinality"}, {"max", c.max}};
    }
    Json operator()(const ExplicitFamily& e) const {
      Json sets = Json::array();
      for (const auto& set : e.sets) {
        Json names = Json::array();
        for (ProductId i : set) names.push_back(name(i.value));
        sets.push_back(names);
      }
      return {{"type", "explicit"}, {"sets", sets}};
    }
  };
  return std::visit(Visitor{inst}, inst.organic_constraint().variant());
}

std::string_view KindName(ProductKind kind) {
  return kind == ProductKind::kOrganic ? "organic" : "sponsored";
}

std::string_view KindName(PositionKind kind) {
  return kind == PositionKind::kOrganic ? "organic" : "reserved";
}

Json ElementsToJson(const Instance& inst, const ElementSet& set) {
  Json out = Json::array();
  for (const Element& e : set.elements()) {
    out.push_back({{"product", inst.product(e.product).name},
                   {"slot", e.position.value}});
  }
  return out;
}

Json OptionalNumber(const std::optional<double>& x) {
  return x ? Json(*x) : Json(nullptr);
}

}  // namespace

Instance instance_from_json(const RawJson& doc) {
  RequireObject(doc, "instance");
  RejectUnknownKeys(doc, "", {"products", "positions", "weights", "w0",
                              "valid_positions", "constraint", "comment"});
  InstanceBuilder b;
  NameIndex names;
  std::vector<ParsedProduct> products;

  const RawJson& jp = Member(doc, "", "products");
  RequireArray(jp, "products");
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::string key = At("products", i);
    RequireObject(jp[i], key);
    RejectUnknownKeys(jp[i], key, {"id", "kind", "revenue", "cost"});
    ParsedProduct p;
    p.name = String(Member(jp[i], key, "id"), key + ".id");
    const std::string kind = String(Member(jp[i], key, "kind"), key + ".kind");
    const double revenue = Number(Member(jp[i], key, "revenue"), key + ".revenue");
    if (auto it = jp[i].find("cost"); it != jp[i].end()) {
      p.cost = Number(*it, key + ".cost");
    }
    if (p.name.empty()) Invalid(key + ".id", "must be non-empty");
    ProductId id;
    if (kind == "organic") {
      p.kind = ProductKind::kOrganic;
      id = b.add_organic(p.name, revenue);
    } else if (kind == "sponsored") {
      p.kind = ProductKind::kSponsored;
      if (p.cost) Invalid(key + ".cost", "sponsored products carry no cost");
      id = b.add_sponsored(p.name, revenue);
    } else {
      Invalid(key + ".kind", "expected \"organic\" or \"sponsored\"");
    }
    for (const auto& q : products) {
      if (q.name == p.name) Invalid(key + ".id", "duplicate product id '" + p.name + "'");
    }
    names.add(p.name, id);
    products.push_back(std::move(p));
  }

  const RawJson& jpos = Member(doc, "", "positions");
  RequireArray(jpos, "positions");
  std::vector<std::optional<PositionKind>> kinds(jpos.size());
  for (std::size_t i = 0; i < jpos.size(); ++i) {
    const std::string key = At("positions", i);
    RequireObject(jpos[i], key);
    RejectUnknownKeys(jpos[i], key, {"slot", "kind"});
    const std::int64_t slot = Integer(Member(jpos[i], key, "slot"), key + ".slot");
    const std::string kind = String(Member(jpos[i], key, "kind"), key + ".kind");
    if (slot < 1 || static_cast<std::size_t>(slot) > jpos.size()) {
      Invalid(key + ".slot", "slots must be numbered 1.." + std::to_string(jpos.size()));
    }
    auto& entry = kinds[static_cast<std::size_t>(slot - 1)];
    if (entry) Invalid(key + ".slot", "slot " + std::to_string(slot) + " listed twice");
    if (kind == "organic") {
      entry = PositionKind::kOrganic;
    } else if (kind == "reserved") {
      entry = PositionKind::kReserved;
    } else {
      Invalid(key + ".kind", "expected \"organic\" or \"reserved\"");
    }
  }
  for (const auto& kind : kinds) b.add_position(*kind);
  const std::size_t k = kinds.size();

  if (auto it = doc.find("weights"); it != doc.end()) {
    RequireArray(*it, "weights");
    std::set<std::pair<std::int32_t, std::int64_t>> seen;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string key = At("weights", i);
      const RawJson& w = (*it)[i];
      RequireObject(w, key);
      RejectUnknownKeys(w, key, {"product", "slot", "w"});
      const ProductId id = names.lookup(
          String(Member(w, key, "product"), key + ".product"), key + ".product");
      const std::int64_t slot = Integer(Member(w, key, "slot"), key + ".slot");
      const double value = Number(Member(w, key, "w"), key + ".w");
      if (slot < 1 || static_cast<std::size_t>(slot) > k) {
        Invalid(key + ".slot", "slot " + std::to_string(slot) + " not in positions");
      }
      if (value < 0.0) Invalid(key + ".w", "must be nonnegative");
      if (!seen.emplace(id.value, slot).second) {
        Invalid(key, "duplicate weight for this (product, slot) pair");
      }
      b.set_weight(id, PositionId{static_cast<std::int32_t>(slot)}, value);
    }
  }

  b.set_no_purchase_weight(Number(Member(doc, "", "w0"), "w0"));

  if (auto it = doc.find("valid_positions"); it != doc.end()) {
    RequireObject(*it, "valid_positions");
    for (const auto& item : it->items()) {
      const std::string key = "valid_positions." + item.key();
      const ProductId id = names.lookup(item.key(), key);
      RequireArray(item.value(), key);
      std::vector<PositionId> slots;
      for (std::size_t s = 0; s < item.value().size(); ++s) {
        const std::int64_t slot = Integer(item.value()[s], At(key, s));
        if (slot < 1 || static_cast<std::size_t>(slot) > k) {
          Invalid(key, "references slot " + std::to_string(slot) +
                           " not in positions");
        }
        slots.push_back(PositionId{static_cast<std::int32_t>(slot)});
      }
      b.set_valid_positions(id, std::move(slots));
    }
  }

  if (auto it = doc.find("constraint"); it != doc.end()) {
    b.set_constraint(ParseConstraint(*it, products, names));
  }
  return b.build();
}

Instance parse_instance(std::string_view text) {
  return instance_from_json(ParseText(text, "instance"));
}

Json instance_to_json(const Instance& inst) {
  const bool knapsack = std::holds_alternative<KnapsackConstraint>(
      inst.organic_constraint().variant());
  Json products = Json::array();
  for (std::size_t i = 0; i < inst.num_products(); ++i) {
    const ProductId id{static_cast<std::int32_t>(i)};
    const Product& p = inst.product(id);
    Json jp = {{"id", p.name}, {"kind", KindName(p.kind)}, {"revenue", p.revenue}};
    if (knapsack && p.kind == ProductKind::kOrganic) {
      jp["cost"] = std::get<KnapsackConstraint>(inst.organic_constraint().variant())
                       .cost[i];
    }
    products.push_back(std::move(jp));
  }
  Json positions = Json::array();
  Json weights = Json::array();
  for (std::size_t t = 1; t <= inst.num_positions(); ++t) {
    const PositionId slot{static_cast<std::int32_t>(t)};
    positions.push_back({{"slot", slot.value}, {"kind", KindName(inst.position_kind(slot))}});
  }
  for (std::size_t i = 0; i < inst.num_products(); ++i) {
    const ProductId id{static_cast<std::int32_t>(i)};
    for (std::size_t t = 1; t <= inst.num_positions(); ++t) {
      const PositionId slot{static_cast<std::int32_t>(t)};
      const double w = inst.weight(id, slot);
      if (w != 0.0) {
        weights.push_back({{"product", inst.product(id).name}, {"slot", slot.value}, {"w", w}});
      }
    }
  }
  Json valid = Json::object();
  for (ProductId s : inst.sponsored()) {
    Json slots = Json::array();
    for (PositionId t : inst.valid_positions(s)) slots.push_back(t.value);
    valid[inst.product(s).name] = std::move(slots);
  }
  return {{"products", products},
          {"positions", positions},
          {"weights", weights},
          {"w0", inst.no_purchase_weight()},
          {"valid_positions", valid},
          {"constraint", ConstraintToJson(inst)}};
}

std::string serialize_instance(const Instance& inst) {
  return instance_to_json(inst).dump(2) + "\n";
}

Placement parse_placement(const Instance& inst, std::string_view text) {
  const RawJson doc = ParseText(text, "placement file");
  RequireObject(doc, "placement file");
  RejectUnknownKeys(doc, "", {"placement", "comment"});
  const RawJson& entries = Member(doc, "", "placement");
  RequireArray(entries, "placement");
  Placement pl;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string key = At("placement", i);
    RequireObject(entries[i], key);
    RejectUnknownKeys(entries[i], key, {"slot", "product", "kind"});
    const std::int64_t slot = Integer(Member(entries[i], key, "slot"), key + ".slot");
    const std::string name =
        String(Member(entries[i], key, "product"), key + ".product");
    const auto id = inst.find_product(name);
    if (!id) Invalid(key + ".product", "unknown product '" + name + "'");
    pl.assign(PositionId{static_cast<std::int32_t>(slot)}, *id);
  }
  return pl;
}

Json placement_to_json(const Instance& inst, const Placement& pl) {
  Json out = Json::array();
  for (const Assignment& a : pl.entries()) {
    out.push_back({{"slot", a.position.value},
                   {"product", inst.product(a.product).name},
                   {"kind", KindName(inst.product(a.product).kind)}});
  }
  return out;
}

Json exact_report_to_json(const Instance& inst, const ExactSolution& sol) {
  Json iterations = Json::array();
  for (const auto& step : sol.trace.iterations) {
    iterations.push_back({{"lambda", step.lambda}, {"inner_value", step.inner_value}});
  }
  return {{"problem", "p0"},
          {"method", "exact"},
          {"revenue", sol.revenue},
          {"placement", placement_to_json(inst, sol.placement)},
          {"dinkelbach", {{"converged", sol.trace.converged},
                          {"iterations", iterations}}}};
}

Json combined_report_to_json(const Instance& inst, const CombinedReport& rep) {
  Json candidates = Json::array();
  for (const auto& c : rep.both) {
    candidates.push_back({{"role", CandidateRoleName(c.role)},
                          {"revenue", c.revenue},
                          {"placement", placement_to_json(inst, c.placement)}});
  }
  Json out = {{"problem", "p2"},
              {"method", "constrained"},
              {"revenue", rep.best.revenue},
              {"placement", placement_to_json(inst, rep.best.placement)},
              {"selected", CandidateRoleName(rep.best.role)},
              {"beta", rep.beta_used},
              {"guaranteed_ratio", rep.guaranteed_ratio()},
              {"candidates", candidates}};
  for (const auto& c : rep.both) {
    if (!c.organic) continue;
    const OrganicStep& s = *c.organic;
    Json guesses = Json::array();
    for (const auto& g : s.guesses) {
      guesses.push_back({{"threshold", OptionalNumber(g.threshold)},
                         {"ground_size", g.ground_size},
                         {"surrogate_value", g.surrogate_value},
                         {"organic_revenue", g.organic_revenue},
                         {"method", MaximizerMethodName(g.method)}});
    }
    out["organic_step"] = {{"sponsored_weight", s.sponsored_weight},
                           {"w0_prime", s.w0_prime},
                           {"threshold", OptionalNumber(s.chosen_threshold)},
                           {"surrogate_value", s.surrogate_value},
                           {"organic_revenue", s.organic_revenue},
                           {"guarantee_beta", s.guarantee_beta},
                           {"chosen", ElementsToJson(inst, s.chosen)},
                           {"extracted", ElementsToJson(inst, s.extracted)},
                           {"guesses", guesses}};
  }
  return out;
}

Json oracle_p0_to_json(const Instance& inst, const OracleSolution& sol) {
  return {{"problem", "p0"},
          {"method", "oracle"},
          {"revenue", sol.revenue},
          {"placement", placement_to_json(inst, sol.placement)}};
}

Json oracle_p2_to_json(const Instance& inst, const DecomposedSolution& sol) {
  return {{"problem", "p2"},
          {"method", "oracle"},
          {"revenue", sol.revenue},
          {"part_sponsored", sol.part_sponsored},
          {"part_organic", sol.part_organic},
          {"placement", placement_to_json(inst, sol.placement)}};
}

Json verdict_to_json(const Instance& inst, const Placement& pl,
                     const FeasibilityVerdict& verdict) {
  Json violations = Json::array();
  for (const Violation& v : verdict.violations) {
    Json jv = {{"kind", ViolationKindName(v.kind)}};
    if (v.product) {
      jv["product"] = inst.has_product(*v.product)
                          ? Json(inst.product(*v.product).name)
                          : Json(v.product->value);
    }
    if (v.position) jv["slot"] = v.position->value;
    jv["message"] = v.message;
    violations.push_back(std::move(jv));
  }
  Json out = {{"feasible", verdict.ok()}};
  if (verdict.ok()) out["revenue"] = expected_revenue(inst, pl);
  out["violations"] = violations;
  return out;
}

Json error_to_json(ErrorCode code, std::string_view message) {
  return {{"error", {{"code", ErrorCodeName(code)}, {"message", message}}}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace assortment
