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

// Set-function view of the organic assortment problem.
//
// The ground set is every (organic product, organic slot) pair. For a set U
// of such elements, a product's effective weight is its best weight over the
// slots U offers it, and
//
//   l(U) = sum_i r_i omega(U,i) / (w0' + sum_j omega(U,j))
//
// is the revenue of showing each product of U at its best slot on top of an
// outside option of weight w0'. h(U) = max over subsets X of U of l(X), and
// the truncated objective min{h(U), r} is monotone submodular whenever r is
// at most the smallest revenue in the ground set.
//
// The maximizing subset is always a revenue threshold set: everything in U
// whose revenue is at least the optimal value, nothing below it. best_subset
// exploits that by sorting products by revenue and scanning prefixes.

#ifndef ASSORTMENT_SURROGATE_H_
#define ASSORTMENT_SURROGATE_H_

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "assortment/model.h"

namespace assortment {

struct Element {
  ProductId product;
  PositionId position;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// A sorted, duplicate-free set of elements together with the shifted
// no-purchase weight w0' used to evaluate it.
class ElementSet {
 public:
  explicit ElementSet(double w0_prime = 1.0) : w0_prime_(w0_prime) {}
  ElementSet(std::vector<Element> elements, double w0_prime);

  const std::vector<Element>& elements() const { return elements_; }
  double w0_prime() const { return w0_prime_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const Element& e) const;

  // Returns false if the element was already present.
  bool insert(const Element& e);
  bool erase(const Element& e);
  ElementSet with(const Element& e) const;

  // Distinct products appearing in the set, ascending.
  std::vector<ProductId> products() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<Element> elements_;
  double w0_prime_;
};

// Every (i, t) with i organic, t an organic slot and r_i >= min_revenue.
// Pass min_revenue = 0 for the full ground set.
ElementSet ground_set(const Instance& inst, double w0_prime,
                      double min_revenue = 0.0);

// Throws kInvalidArgument if U contains a sponsored product or reserved slot.
void validate_element_set(const Instance& inst, const ElementSet& u);

// omega(U, i): the largest w(i,t) over (i,t) in U. kProductNotInSet if U has
// no element of product i.
double effective_weight(const Instance& inst, const ElementSet& u, ProductId i);

// l(U); 0 for the empty set.
double set_utility(const Instance& inst, const ElementSet& u);

struct BestSubset {
  ElementSet subset;
  double value = 0.0;  // l(subset) = h(U)
};

// h(U) and a maximizing subset of the form {(i,t) in U : r_i >= tau}.
// Among equally good thresholds the smallest set wins; with no profitable
// subset (e.g. all weights zero) the result is the empty set with value 0.
BestSubset best_subset(const Instance& inst, const ElementSet& u);

struct SurrogateObjective {
  double r_threshold = 0.0;
};

// min{h(U), threshold}.
double surrogate_value(const Instance& inst, const ElementSet& u,
                       const SurrogateObjective& objective);

// Placement of the products of U, each at its highest-weight slot in U (ties
// toward the lower slot). Requires at most one element per slot, which makes
// the placement injective.
Placement best_position_placement(const Instance& inst, const ElementSet& u);

namespace internal {

// Per-product summary used by the hot paths: revenue and effective weight.
struct ProductWeight {
  double revenue;
  double weight;
  ProductId product;
};

// h over products already reduced to effective weights. Returns the value
// and the number of leading entries (after sorting by revenue, descending,
// ties by product id) forming the best threshold set.
struct ThresholdScan {
  double value = 0.0;
  std::size_t prefix = 0;
};
ThresholdScan scan_thresholds(std::vector<ProductWeight>& items,
                              double w0_prime);

}  // namespace internal
}  // namespace assortment

#endif  // ASSORTMENT_SURROGATE_H_
