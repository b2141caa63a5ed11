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

// Domain types for assortment planning with sponsored products under a
// position-dependent multinomial logit (MNL) choice model.
//
// An Instance holds organic products O, sponsored products S, display slots
// 1..k split into organic slots P and reserved slots R, the position-dependent
// utility weights w(i,t), the no-purchase weight w0, the valid reserved slots
// R_i of each sponsored product, and an optional downward-closed family I
// restricting which organic sets may be shown.
//
// Instances are immutable once built; every function in this header is a pure
// function of its arguments.

#ifndef ASSORTMENT_MODEL_H_
#define ASSORTMENT_MODEL_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace assortment {

// Revenue comparisons across solvers and oracles use this absolute tolerance.
inline constexpr double kRevenueTolerance = 1e-9;

struct ProductId {
  std::int32_t value = -1;
  friend auto operator<=>(const ProductId&, const ProductId&) = default;
};

// A display slot, 1-based.
struct PositionId {
  std::int32_t value = 0;
  friend auto operator<=>(const PositionId&, const PositionId&) = default;
};

enum class ProductKind { kOrganic, kSponsored };
enum class PositionKind { kOrganic, kReserved };

struct Product {
  std::string name;
  ProductKind kind = ProductKind::kOrganic;
  double revenue = 0.0;
  friend bool operator==(const Product&, const Product&) = default;
};

// ---------------------------------------------------------------------------
// Organic constraint families. All are downward closed over organic products.
// ---------------------------------------------------------------------------

struct Unconstrained {
  friend bool operator==(const Unconstrained&, const Unconstrained&) = default;
};

// Sum of costs of the shown organic products must not exceed `capacity`.
// `cost` is indexed by ProductId; entries of sponsored products are ignored.
struct KnapsackConstraint {
  std::vector<double> cost;
  double capacity = 0.0;
  friend bool operator==(const KnapsackConstraint&,
                         const KnapsackConstraint&) = default;
};

// Organic products are partitioned into groups; at most caps[q] products of
// group q may be shown. `group_of` is indexed by ProductId (-1 for sponsored).
struct PartitionMatroidConstraint {
  std::vector<int> group_of;
  std::vector<int> caps;
  friend bool operator==(const PartitionMatroidConstraint&,
                         const PartitionMatroidConstraint&) = default;
};

struct CardinalityConstraint {
  int max = 0;
  friend bool operator==(const CardinalityConstraint&,
                         const CardinalityConstraint&) = default;
};

// The family listed set by set. Each set is kept sorted.
struct ExplicitFamily {
  std::vector<std::vector<ProductId>> sets;
  friend bool operator==(const ExplicitFamily&,
                         const ExplicitFamily&) = default;
};

class ConstraintFamily {
 public:
  using Variant = std::variant<Unconstrained, KnapsackConstraint,
                               PartitionMatroidConstraint,
                               CardinalityConstraint, ExplicitFamily>;

  ConstraintFamily() = default;
  ConstraintFamily(Variant v);  // NOLINT: implicit by design of the variant

  const Variant& variant() const { return variant_; }
  bool is_unconstrained() const {
    return std::holds_alternative<Unconstrained>(variant_);
  }
  std::string_view type_name() const;

  // True iff the organic product set belongs to the family. `organic` need
  // not be sorted; duplicates count once.
  bool admits(std::span<const ProductId> organic) const;

  // Checks that the family is closed under removing one element. Structural
  // for knapsack/matroid/cardinality; enumerated for explicit families.
  bool is_downward_closed() const;

  friend bool operator==(const ConstraintFamily&,
                         const ConstraintFamily&) = default;

 private:
  Variant variant_;
};

// ---------------------------------------------------------------------------
// Instance
// ---------------------------------------------------------------------------

class InstanceBuilder;

class Instance {
 public:
  std::size_t num_products() const { return products_.size(); }
  // k, the number of display slots.
  std::size_t num_positions() const { return position_kinds_.size(); }

  const Product& product(ProductId i) const { return products_[index(i)]; }
  double revenue(ProductId i) const { return products_[index(i)].revenue; }
  bool is_sponsored(ProductId i) const {
    return products_[index(i)].kind == ProductKind::kSponsored;
  }
  PositionKind position_kind(PositionId t) const {
    return position_kinds_[static_cast<std::size_t>(t.value - 1)];
  }
  bool has_product(ProductId i) const {
    return i.value >= 0 && static_cast<std::size_t>(i.value) < num_products();
  }
  bool has_position(PositionId t) const {
    return t.value >= 1 && static_cast<std::size_t>(t.value) <= num_positions();
  }

  // w(i,t); pairs that were never set are 0.
  double weight(ProductId i, PositionId t) const {
    return weights_[index(i) * num_positions() +
                    static_cast<std::size_t>(t.value - 1)];
  }
  double no_purchase_weight() const { return w0_; }

  const std::vector<ProductId>& organic() const { return organic_; }
  const std::vector<ProductId>& sponsored() const { return sponsored_; }
  const std::vector<PositionId>& organic_positions() const {
    return organic_positions_;
  }
  const std::vector<PositionId>& reserved_positions() const {
    return reserved_positions_;
  }

  // R_i for a sponsored product (sorted); empty for organic products.
  const std::vector<PositionId>& valid_positions(ProductId i) const {
    return valid_[index(i)];
  }
  bool is_valid_position(ProductId i, PositionId t) const;

  const ConstraintFamily& organic_constraint() const { return constraint_; }

  std::optional<ProductId> find_product(std::string_view name) const;

  // Copy with every organic product removed (ids are renumbered, names are
  // kept) and the organic constraint dropped.
  Instance without_organics() const;

  // Copy with all revenues multiplied by `factor` (> 0).
  Instance with_scaled_revenues(double factor) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  friend class InstanceBuilder;
  Instance() = default;

  static std::size_t index(ProductId i) {
    return static_cast<std::size_t>(i.value);
  }

  std::vector<Product> products_;
  std::vector<PositionKind> position_kinds_;
  std::vector<double> weights_;  // row-major, num_products x num_positions
  double w0_ = 1.0;
  std::vector<std::vector<PositionId>> valid_;
  ConstraintFamily constraint_;

  std::vector<ProductId> organic_;
  std::vector<ProductId> sponsored_;
  std::vector<PositionId> organic_positions_;
  std::vector<PositionId> reserved_positions_;
};

// Accumulates instance data and validates it in build(). Product ids are
// handed out in insertion order starting at 0.
class InstanceBuilder {
 public:
  ProductId add_organic(std::string name, double revenue);
  ProductId add_sponsored(std::string name, double revenue);
  // Appends slot number (current k + 1) of the given kind.
  PositionId add_position(PositionKind kind);
  InstanceBuilder& set_weight(ProductId i, PositionId t, double w);
  InstanceBuilder& set_no_purchase_weight(double w0);
  InstanceBuilder& set_valid_positions(ProductId i,
                                       std::vector<PositionId> slots);
  InstanceBuilder& set_constraint(ConstraintFamily family);

  // Throws Error(kValidationError) naming the violated invariant.
  Instance build() const;

 private:
  struct WeightEntry {
    ProductId product;
    PositionId position;
    double w;
  };
  std::vector<Product> products_;
  std::vector<PositionKind> positions_;
  std::vector<WeightEntry> weights_;
  double w0_ = 1.0;
  std::unordered_map<std::int32_t, std::vector<PositionId>> valid_;
  ConstraintFamily constraint_;
};

// ---------------------------------------------------------------------------
// Placement
// ---------------------------------------------------------------------------

struct Assignment {
  PositionId position;
  ProductId product;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

// A (possibly partial) assignment of products to slots, kept sorted by slot.
// Construction does not validate: check_feasible() reports every defect, and
// the revenue functions reject placements that are not injective maps onto
// allowed slots.
class Placement {
 public:
  Placement() = default;
  explicit Placement(std::vector<Assignment> entries);

  void assign(PositionId t, ProductId i);
  const std::vector<Assignment>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::optional<PositionId> position_of(ProductId i) const;
  std::optional<ProductId> product_at(PositionId t) const;

  // Union of two placements (entries of `other` appended).
  Placement merged_with(const Placement& other) const;

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  std::vector<Assignment> entries_;
};

// ---------------------------------------------------------------------------
// Choice model evaluation
// ---------------------------------------------------------------------------

// MNL choice probability of product i under placement pl.
// Throws kProductNotPlaced if i is not shown, kInvalidPlacement if pl is
// malformed.
double choice_probability(const Instance& inst, const Placement& pl,
                          ProductId i);

// Probability of the outside option, w0 / (w0 + sum of shown weights).
double no_purchase_probability(const Instance& inst, const Placement& pl);

// Expected revenue f(pl). 0 for the empty placement.
double expected_revenue(const Instance& inst, const Placement& pl);

// Expected revenue with the no-purchase weight replaced by `w0_override`.
// With the sponsored weight folded into w0 this is the organic objective f'.
double expected_revenue_with_w0(const Instance& inst, const Placement& pl,
                                double w0_override);

// f(pl) split into the sponsored-product terms and organic-product terms.
struct RevenueSplit {
  double sponsored = 0.0;
  double organic = 0.0;
  double total = 0.0;
};
RevenueSplit revenue_split(const Instance& inst, const Placement& pl);

// ---------------------------------------------------------------------------
// Feasibility
// ---------------------------------------------------------------------------

enum class ViolationKind {
  kUnknownProduct,
  kUnknownPosition,
  kDuplicateProduct,
  kDuplicatePosition,
  kSponsoredUnplaced,
  kSponsoredOutsideValid,
  kOrganicAtReserved,
  kOrganicConstraint,
};

std::string_view ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::optional<ProductId> product;
  std::optional<PositionId> position;
  std::string message;
};

struct FeasibilityVerdict {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Lists every violated condition; never throws.
FeasibilityVerdict check_feasible(const Instance& inst, const Placement& pl);

// Organic products shown by pl, in slot order.
std::vector<ProductId> organic_products(const Instance& inst,
                                        const Placement& pl);

}  // namespace assortment

#endif  // ASSORTMENT_MODEL_H_
