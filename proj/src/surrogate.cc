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

#include "assortment/surrogate.h"

#include <algorithm>
#include <map>
#include <string>

#include "assortment/error.h"

namespace assortment {

ElementSet::ElementSet(std::vector<Element> elements, double w0_prime)
    : elements_(std::move(elements)), w0_prime_(w0_prime) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

bool ElementSet::contains(const Element& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool ElementSet::insert(const Element& e) {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it != elements_.end() && *it == e) return false;
  elements_.insert(it, e);
  return true;
}

bool ElementSet::erase(const Element& e) {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || *it != e) return false;
  elements_.erase(it);
  return true;
}

ElementSet ElementSet::with(const Element& e) const {
  ElementSet copy = *this;
  copy.insert(e);
  return copy;
}

std::vector<ProductId> ElementSet::products() const {
  std::vector<ProductId> out;
  for (const auto& e : elements_) {
    if (out.empty() || out.back() != e.product) out.push_back(e.product);
  }
  return out;
}

ElementSet ground_set(const Instance& inst, double w0_prime,
                      double min_revenue) {
  std::vector<Element> elements;
  for (ProductId i : inst.organic()) {
    if (inst.revenue(i) < min_revenue) continue;
    for (PositionId t : inst.organic_positions()) elements.push_back({i, t});
  }
  return ElementSet(std::move(elements), w0_prime);
}

void validate_element_set(const Instance& inst, const ElementSet& u) {
  for (const auto& e : u.elements()) {
    if (!inst.has_product(e.product) || inst.is_sponsored(e.product)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "element set contains a non-organic product");
    }
    if (!inst.has_position(e.position) ||
        inst.position_kind(e.position) != PositionKind::kOrganic) {
      throw Error(ErrorCode::kInvalidArgument,
                  "element set contains a non-organic slot");
    }
  }
}

double effective_weight(const Instance& inst, const ElementSet& u,
                        ProductId i) {
  bool found = false;
  double best = 0.0;
  for (const auto& e : u.elements()) {
    if (e.product != i) continue;
    const double w = inst.weight(i, e.position);
    if (!found || w > best) best = w;
    found = true;
  }
  if (!found) {
    throw Error(ErrorCode::kProductNotInSet,
                "product " + std::to_string(i.value) + " has no element in U");
  }
  return best;
}

namespace {

std::vector<internal::ProductWeight> ReduceToProducts(const Instance& inst,
                                                      const ElementSet& u) {
  std::vector<internal::ProductWeight> items;
  // Elements are sorted by product, so each product's run is contiguous.
  for (const auto& e : u.elements()) {
    const double w = inst.weight(e.product, e.position);
    if (!items.empty() && items.back().product == e.product) {
      items.back().weight = std::max(items.back().weight, w);
    } else {
      items.push_back({inst.revenue(e.product), w, e.product});
    }
  }
  return items;
}

}  // namespace

double set_utility(const Instance& inst, const ElementSet& u) {
  if (u.empty()) return 0.0;
  double numerator = 0.0;
  double weight_sum = 0.0;
  for (const auto& item : ReduceToProducts(inst, u)) {
    numerator += item.revenue * item.weight;
    weight_sum += item.weight;
  }
  return numerator / (u.w0_prime() + weight_sum);
}

namespace internal {

ThresholdScan scan_thresholds(std::vector<ProductWeight>& items,
                              double w0_prime) {
  std::sort(items.begin(), items.end(),
            [](const ProductWeight& a, const ProductWeight& b) {
              if (a.revenue != b.revenue) return a.revenue > b.revenue;
              return a.product < b.product;
            });
  ThresholdScan best;
  double numerator = 0.0;
  double weight_sum = 0.0;
  for (std::size_t j = 0; j < items.size(); ++j) {
    numerator += items[j].revenue * items[j].weight;
    weight_sum += items[j].weight;
    // Only whole revenue classes form threshold sets.
    if (j + 1 < items.size() && items[j + 1].revenue == items[j].revenue) {
      continue;
    }
    const double value = numerator / (w0_prime + weight_sum);
    if (value > best.value) {
      best.value = value;
      best.prefix = j + 1;
    }
  }
  return best;
}

}  // namespace internal

BestSubset best_subset(const Instance& inst, const ElementSet& u) {
  std::vector<internal::ProductWeight> items = ReduceToProducts(inst, u);
  const internal::ThresholdScan scan =
      internal::scan_thresholds(items, u.w0_prime());
  BestSubset out{ElementSet(u.w0_prime()), scan.value};
  if (scan.prefix == 0) return out;
  std::vector<ProductId> keep;
  keep.reserve(scan.prefix);
  for (std::size_t j = 0; j < scan.prefix; ++j) keep.push_back(items[j].product);
  std::sort(keep.begin(), keep.end());
  std::vector<Element> chosen;
  for (const auto& e : u.elements()) {
    if (std::binary_search(keep.begin(), keep.end(), e.product)) {
      chosen.push_back(e);
    }
  }
  out.subset = ElementSet(std::move(chosen), u.w0_prime());
  return out;
}

double surrogate_value(const Instance& inst, const ElementSet& u,
                       const SurrogateObjective& objective) {
  return std::min(best_subset(inst, u).value, objective.r_threshold);
}

Placement best_position_placement(const Instance& inst, const ElementSet& u) {
  std::map<ProductId, PositionId> best;
  for (const auto& e : u.elements()) {
    auto it = best.find(e.product);
    if (it == best.end()) {
      best.emplace(e.product, e.position);
    } else if (inst.weight(e.product, e.position) >
               inst.weight(e.product, it->second)) {
      it->second = e.position;
    }
  }
  Placement pl;
  for (const auto& [product, position] : best) pl.assign(position, product);
  return pl;
}

}  // namespace assortment
