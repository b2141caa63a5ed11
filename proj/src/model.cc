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

#include "assortment/model.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "assortment/error.h"

namespace assortment {
namespace {

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorCode::kValidationError, message);
}

std::vector<ProductId> SortedUnique(std::span<const ProductId> ids) {
  std::vector<ProductId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ConstraintFamily
// ---------------------------------------------------------------------------

ConstraintFamily::ConstraintFamily(Variant v) : variant_(std::move(v)) {
  if (auto* family = std::get_if<ExplicitFamily>(&variant_)) {
    for (auto& set : family->sets) {
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    std::sort(family->sets.begin(), family->sets.end());
    family->sets.erase(std::unique(family->sets.begin(), family->sets.end()),
                       family->sets.end());
  }
}

std::string_view ConstraintFamily::type_name() const {
  struct Visitor {
    std::string_view operator()(const Unconstrained&) const { return "none"; }
    std::string_view operator()(const KnapsackConstraint&) const {
      return "knapsack";
    }
    std::string_view operator()(const PartitionMatroidConstraint&) const {
      return "partition";
    }
    std::string_view operator()(const CardinalityConstraint&) const {
      return "cardinality";
    }
    std::string_view operator()(const ExplicitFamily&) const {
      return "explicit";
    }
  };
  return std::visit(Visitor{}, variant_);
}

bool ConstraintFamily::admits(std::span<const ProductId> organic) const {
  const std::vector<ProductId> set = SortedUnique(organic);
  struct Visitor {
    const std::vector<ProductId>& set;
    bool operator()(const Unconstrained&) const { return true; }
    bool operator()(const KnapsackConstraint& k) const {
      double total = 0.0;
      for (ProductId i : set) {
        total += k.cost.at(static_cast<std::size_t>(i.value));
      }
      return total <= k.capacity;
    }
    bool operator()(const PartitionMatroidConstraint& p) const {
      std::vector<int> used(p.caps.size(), 0);
      for (ProductId i : set) {
        const int g = p.group_of.at(static_cast<std::size_t>(i.value));
        if (g < 0 || static_cast<std::size_t>(g) >= p.caps.size()) return false;
        if (++used[static_cast<std::size_t>(g)] > p.caps[static_cast<std::size_t>(g)]) {
          return false;
        }
      }
      return true;
    }
    bool operator()(const CardinalityConstraint& c) const {
      return static_cast<int>(set.size()) <= c.max;
    }
    bool operator()(const ExplicitFamily& e) const {
      return std::binary_search(e.sets.begin(), e.sets.end(), set);
    }
  };
  return std::visit(Visitor{set}, variant_);
}

bool ConstraintFamily::is_downward_closed() const {
  const auto* family = std::get_if<ExplicitFamily>(&variant_);
  if (family == nullptr) return true;
  if (family->sets.empty()) return false;  // the empty set must be listed
  for (const auto& set : family->sets) {
    for (std::size_t drop = 0; drop < set.size(); ++drop) {
      std::vector<ProductId> smaller;
      smaller.reserve(set.size() - 1);
      for (std::size_t j = 0; j < set.size(); ++j) {
        if (j != drop) smaller.push_back(set[j]);
      }
      if (!std::binary_search(family->sets.begin(), family->sets.end(),
                              smaller)) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Instance
// ---------------------------------------------------------------------------

bool Instance::is_valid_position(ProductId i, PositionId t) const {
  const auto& slots = valid_[index(i)];
  return std::binary_search(slots.begin(), slots.end(), t);
}

std::optional<ProductId> Instance::find_product(std::string_view name) const {
  for (std::size_t i = 0; i < products_.size(); ++i) {
    if (products_[i].name == name) {
      return ProductId{static_cast<std::int32_t>(i)};
    }
  }
  return std::nullopt;
}

Instance Instance::without_organics() const {
  InstanceBuilder b;
  for (PositionKind kind : position_kinds_) b.add_position(kind);
  for (ProductId old : sponsored_) {
    const Product& p = product(old);
    const ProductId id = b.add_sponsored(p.name, p.revenue);
    for (std::size_t t = 1; t <= num_positions(); ++t) {
      const PositionId slot{static_cast<std::int32_t>(t)};
      const double w = weight(old, slot);
      if (w != 0.0) b.set_weight(id, slot, w);
    }
    b.set_valid_positions(id, valid_positions(old));
  }
  b.set_no_purchase_weight(w0_);
  return b.build();
}

Instance Instance::with_scaled_revenues(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw Error(ErrorCode::kInvalidArgument,
                "revenue scale factor must be positive and finite");
  }
  Instance copy = *this;
  for (auto& p : copy.products_) p.revenue *= factor;
  return copy;
}

ProductId InstanceBuilder::add_organic(std::string name, double revenue) {
  products_.push_back({std::move(name), ProductKind::kOrganic, revenue});
  return ProductId{static_cast<std::int32_t>(products_.size() - 1)};
}

ProductId InstanceBuilder::add_sponsored(std::string name, double revenue) {
  products_.push_back({std::move(name), ProductKind::kSponsored, revenue});
  return ProductId{static_cast<std::int32_t>(products_.size() - 1)};
}

PositionId InstanceBuilder::add_position(PositionKind kind) {
  positions_.push_back(kind);
  return PositionId{static_cast<std::int32_t>(positions_.size())};
}

InstanceBuilder& InstanceBuilder::set_weight(ProductId i, PositionId t,
                                             double w) {
  weights_.push_back({i, t, w});
  return *this;
}

InstanceBuilder& InstanceBuilder::set_no_purchase_weight(double w0) {
  w0_ = w0;
  return *this;
}

InstanceBuilder& InstanceBuilder::set_valid_positions(
    ProductId i, std::vector<PositionId> slots) {
  valid_[i.value] = std::move(slots);
  return *this;
}

InstanceBuilder& InstanceBuilder::set_constraint(ConstraintFamily family) {
  constraint_ = std::move(family);
  return *this;
}

Instance InstanceBuilder::build() const {
  Instance inst;
  inst.products_ = products_;
  inst.position_kinds_ = positions_;
  const std::size_t n = products_.size();
  const std::size_t k = positions_.size();

  std::set<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    const Product& p = products_[i];
    if (p.name.empty()) Invalid("product " + std::to_string(i) + " has no id");
    if (!names.insert(p.name).second) {
      Invalid("duplicate product id '" + p.name + "'");
    }
    if (!std::isfinite(p.revenue) || p.revenue < 0.0) {
      Invalid("product '" + p.name + "' has a negative or non-finite revenue");
    }
    const ProductId id{static_cast<std::int32_t>(i)};
    (p.kind == ProductKind::kOrganic ? inst.organic_ : inst.sponsored_)
        .push_back(id);
  }
  for (std::size_t t = 0; t < k; ++t) {
    const PositionId slot{static_cast<std::int32_t>(t + 1)};
    (positions_[t] == PositionKind::kOrganic ? inst.organic_positions_
                                             : inst.reserved_positions_)
        .push_back(slot);
  }

  if (!std::isfinite(w0_) || !(w0_ > 0.0)) {
    Invalid("w0 must be positive and finite");
  }
  inst.w0_ = w0_;

  inst.weights_.assign(n * k, 0.0);
  for (const auto& e : weights_) {
    if (e.product.value < 0 || static_cast<std::size_t>(e.product.value) >= n) {
      Invalid("weight references unknown product " +
              std::to_string(e.product.value));
    }
    if (e.position.value < 1 || static_cast<std::size_t>(e.position.value) > k) {
      Invalid("weight references unknown slot " +
              std::to_string(e.position.value));
    }
    if (!std::isfinite(e.w) || e.w < 0.0) {
      Invalid("weight of '" + products_[static_cast<std::size_t>(e.product.value)].name +
              "' at slot " + std::to_string(e.position.value) +
              " is negative or non-finite");
    }
    inst.weights_[static_cast<std::size_t>(e.product.value) * k +
                  static_cast<std::size_t>(e.position.value - 1)] = e.w;
  }

  if (inst.sponsored_.size() != inst.reserved_positions_.size()) {
    std::ostringstream msg;
    msg << "number of sponsored products (" << inst.sponsored_.size()
        << ") must equal number of reserved slots ("
        << inst.reserved_positions_.size() << ")";
    Invalid(msg.str());
  }

  inst.valid_.assign(n, {});
  for (const auto& [raw_id, slots] : valid_) {
    if (raw_id < 0 || static_cast<std::size_t>(raw_id) >= n) {
      Invalid("valid positions given for unknown product " +
              std::to_string(raw_id));
    }
    const Product& p = products_[static_cast<std::size_t>(raw_id)];
    if (p.kind != ProductKind::kSponsored) {
      Invalid("valid_positions." + p.name + " given for an organic product");
    }
    std::vector<PositionId> sorted = slots;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      Invalid("valid_positions." + p.name + " lists a slot twice");
    }
    for (PositionId t : sorted) {
      if (t.value < 1 || static_cast<std::size_t>(t.value) > k) {
        Invalid("valid_positions." + p.name + " references slot " +
                std::to_string(t.value) + " not in positions");
      }
      if (positions_[static_cast<std::size_t>(t.value - 1)] !=
          PositionKind::kReserved) {
        Invalid("valid_positions." + p.name + " references slot " +
                std::to_string(t.value) + " which is not reserved");
      }
    }
    inst.valid_[static_cast<std::size_t>(raw_id)] = std::move(sorted);
  }
  for (ProductId s : inst.sponsored_) {
    if (inst.valid_[static_cast<std::size_t>(s.value)].empty()) {
      Invalid("valid_positions." + products_[static_cast<std::size_t>(s.value)].name +
              " is missing or empty");
    }
  }

  // Organic constraint parameters.
  struct Checker {
    const InstanceBuilder& b;
    std::size_t n;
    void operator()(const Unconstrained&) const {}
    void operator()(const KnapsackConstraint& c) const {
      if (c.cost.size() != n) Invalid("knapsack cost vector has wrong size");
      for (double x : c.cost) {
        if (!std::isfinite(x) || x < 0.0) {
          Invalid("knapsack costs must be nonnegative and finite");
        }
      }
      if (!std::isfinite(c.capacity) || c.capacity < 0.0) {
        Invalid("knapsack capacity must be nonnegative and finite");
      }
    }
    void operator()(const PartitionMatroidConstraint& c) const {
      if (c.group_of.size() != n) Invalid("partition group map has wrong size");
      for (std::size_t i = 0; i < n; ++i) {
        const int g = c.group_of[i];
        const bool organic = b.products_[i].kind == ProductKind::kOrganic;
        if (organic && (g < 0 || static_cast<std::size_t>(g) >= c.caps.size())) {
          Invalid("organic product '" + b.products_[i].name +
                  "' is not assigned to a partition group");
        }
        if (!organic && g != -1) {
          Invalid("sponsored product '" + b.products_[i].name +
                  "' must not belong to a partition group");
        }
      }
      for (int cap : c.caps) {
        if (cap < 0) Invalid("partition caps must be nonnegative");
      }
    }
    void operator()(const CardinalityConstraint& c) const {
      if (c.max < 0) Invalid("cardinality bound must be nonnegative");
    }
    void operator()(const ExplicitFamily& e) const {
      for (const auto& set : e.sets) {
        for (ProductId i : set) {
          if (i.value < 0 || static_cast<std::size_t>(i.value) >= n ||
              b.products_[static_cast<std::size_t>(i.value)].kind !=
                  ProductKind::kOrganic) {
            Invalid("explicit family lists a non-organic product");
          }
        }
      }
    }
  };
  std::visit(Checker{*this, n}, constraint_.variant());
  if (!constraint_.is_downward_closed()) {
    Invalid("explicit organic family is not downward closed");
  }
  inst.constraint_ = constraint_;
  return inst;
}

// ---------------------------------------------------------------------------
// Placement
// ---------------------------------------------------------------------------

Placement::Placement(std::vector<Assignment> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
}

void Placement::assign(PositionId t, ProductId i) {
  const Assignment a{t, i};
  entries_.insert(std::upper_bound(entries_.begin(), entries_.end(), a), a);
}

std::optional<PositionId> Placement::position_of(ProductId i) const {
  for (const auto& a : entries_) {
    if (a.product == i) return a.position;
  }
  return std::nullopt;
}

std::optional<ProductId> Placement::product_at(PositionId t) const {
  for (const auto& a : entries_) {
    if (a.position == t) return a.product;
  }
  return std::nullopt;
}

Placement Placement::merged_with(const Placement& other) const {
  std::vector<Assignment> all = entries_;
  all.insert(all.end(), other.entries_.begin(), other.entries_.end());
  return Placement(std::move(all));
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

// Structural checks that every evaluated placement must pass. Sponsored
// completeness and the organic family are feasibility questions, not
// well-formedness ones, and are left to check_feasible.
void AppendStructuralViolations(const Instance& inst, const Placement& pl,
                                std::vector<Violation>& out) {
  std::vector<char> seen_products(inst.num_products(), 0);
  std::vector<char> seen_positions(inst.num_positions() + 1, 0);
  for (const auto& a : pl.entries()) {
    const bool known_product = inst.has_product(a.product);
    const bool known_position = inst.has_position(a.position);
    if (!known_product) {
      out.push_back({ViolationKind::kUnknownProduct, a.product, a.position,
                     "product " + std::to_string(a.product.value) +
                         " does not exist"});
    }
    if (!known_position) {
      out.push_back({ViolationKind::kUnknownPosition, a.product, a.position,
                     "slot " + std::to_string(a.position.value) +
                         " does not exist"});
    }
    if (known_product &&
        std::exchange(seen_products[static_cast<std::size_t>(a.product.value)], 1)) {
      out.push_back({ViolationKind::kDuplicateProduct, a.product, a.position,
                     "product '" + inst.product(a.product).name +
                         "' is shown more than once"});
    }
    if (known_position &&
        std::exchange(seen_positions[static_cast<std::size_t>(a.position.value)], 1)) {
      out.push_back({ViolationKind::kDuplicatePosition, a.product, a.position,
                     "slot " + std::to_string(a.position.value) +
                         " holds more than one product"});
    }
    if (!known_product || !known_position) continue;
    if (inst.is_sponsored(a.product)) {
      if (!inst.is_valid_position(a.product, a.position)) {
        out.push_back({ViolationKind::kSponsoredOutsideValid, a.product,
                       a.position,
                       "sponsored product '" + inst.product(a.product).name +
                           "' is at slot " + std::to_string(a.position.value) +
                           " outside its valid positions"});
      }
    } else if (inst.position_kind(a.position) == PositionKind::kReserved) {
      out.push_back({ViolationKind::kOrganicAtReserved, a.product, a.position,
                     "organic product '" + inst.product(a.product).name +
                         "' is at reserved slot " +
                         std::to_string(a.position.value)});
    }
  }
}

void RequireWellFormed(const Instance& inst, const Placement& pl) {
  std::vector<Violation> v;
  AppendStructuralViolations(inst, pl, v);
  if (!v.empty()) throw Error(ErrorCode::kInvalidPlacement, v.front().message);
}

double ShownWeight(const Instance& inst, const Placement& pl) {
  double total = 0.0;
  for (const auto& a : pl.entries()) total += inst.weight(a.product, a.position);
  return total;
}

}  // namespace

double choice_probability(const Instance& inst, const Placement& pl,
                          ProductId i) {
  RequireWellFormed(inst, pl);
  const auto t = pl.position_of(i);
  if (!t) {
    throw Error(ErrorCode::kProductNotPlaced,
                "product " + std::to_string(i.value) + " is not in the placement");
  }
  return inst.weight(i, *t) / (inst.no_purchase_weight() + ShownWeight(inst, pl));
}

double no_purchase_probability(const Instance& inst, const Placement& pl) {
  RequireWellFormed(inst, pl);
  return inst.no_purchase_weight() /
         (inst.no_purchase_weight() + ShownWeight(inst, pl));
}

RevenueSplit revenue_split(const Instance& inst, const Placement& pl) {
  RequireWellFormed(inst, pl);
  const double denom = inst.no_purchase_weight() + ShownWeight(inst, pl);
  RevenueSplit split;
  double sponsored_num = 0.0;
  double organic_num = 0.0;
  for (const auto& a : pl.entries()) {
    const double term = inst.revenue(a.product) * inst.weight(a.product, a.position);
    (inst.is_sponsored(a.product) ? sponsored_num : organic_num) += term;
  }
  split.sponsored = sponsored_num / denom;
  split.organic = organic_num / denom;
  split.total = (sponsored_num + organic_num) / denom;
  return split;
}

double expected_revenue(const Instance& inst, const Placement& pl) {
  return expected_revenue_with_w0(inst, pl, inst.no_purchase_weight());
}

double expected_revenue_with_w0(const Instance& inst, const Placement& pl,
                                double w0_override) {
  RequireWellFormed(inst, pl);
  if (pl.empty()) return 0.0;
  double numerator = 0.0;
  double denominator = w0_override;
  for (const auto& a : pl.entries()) {
    const double w = inst.weight(a.product, a.position);
    numerator += inst.revenue(a.product) * w;
    denominator += w;
  }
  return numerator / denominator;
}

// ---------------------------------------------------------------------------
// Feasibility
// ---------------------------------------------------------------------------

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUnknownProduct:
      return "unknown_product";
    case ViolationKind::kUnknownPosition:
      return "unknown_slot";
    case ViolationKind::kDuplicateProduct:
      return "duplicate_product";
    case ViolationKind::kDuplicatePosition:
      return "duplicate_slot";
    case ViolationKind::kSponsoredUnplaced:
      return "sponsored_unplaced";
    case ViolationKind::kSponsoredOutsideValid:
      return "sponsored_outside_valid";
    case ViolationKind::kOrganicAtReserved:
      return "organic_at_reserved";
    case ViolationKind::kOrganicConstraint:
      return "organic_constraint";
  }
  return "unknown";
}

std::vector<ProductId> organic_products(const Instance& inst,
                                        const Placement& pl) {
  std::vector<ProductId> out;
  for (const auto& a : pl.entries()) {
    if (inst.has_product(a.product) && !inst.is_sponsored(a.product)) {
      out.push_back(a.product);
    }
  }
  return out;
}

FeasibilityVerdict check_feasible(const Instance& inst, const Placement& pl) {
  FeasibilityVerdict verdict;
  AppendStructuralViolations(inst, pl, verdict.violations);
  for (ProductId s : inst.sponsored()) {
    if (!pl.position_of(s)) {
      verdict.violations.push_back(
          {ViolationKind::kSponsoredUnplaced, s, std::nullopt,
           "sponsored product '" + inst.product(s).name + "' is unplaced"});
    }
  }
  const std::vector<ProductId> organic = organic_products(inst, pl);
  if (!inst.organic_constraint().admits(organic)) {
    verdict.violations.push_back(
        {ViolationKind::kOrganicConstraint, std::nullopt, std::nullopt,
         "organic set violates the " +
             std::string(inst.organic_constraint().type_name()) +
             " organic constraint"});
  }
  return verdict;
}

}  // namespace assortment
