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

// Independent reference computations for the tests. Nothing here calls the
// solvers; revenue is recomputed from raw weights.

#ifndef ASSORTMENT_TESTS_TEST_UTIL_H_
#define ASSORTMENT_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "assortment/generator.h"
#include "assortment/matching.h"
#include "assortment/model.h"
#include "assortment/surrogate.h"

namespace assortment::testing {

inline ProductId P(int i) { return ProductId{i}; }
inline PositionId T(int t) { return PositionId{t}; }

// sum r_i w_i / (w0 + sum w_i), straight from the raw instance data.
inline double NaiveRevenue(const Instance& inst, const Placement& pl,
                           std::optional<double> w0 = std::nullopt) {
  double num = 0.0;
  double den = w0.value_or(inst.no_purchase_weight());
  for (const auto& a : pl.entries()) {
    num += inst.product(a.product).revenue * inst.weight(a.product, a.position);
    den += inst.weight(a.product, a.position);
  }
  return pl.empty() ? 0.0 : num / den;
}

// Optimum over all perfect matchings by permutation enumeration; nullopt if
// none exists. Totals are summed in left-node order.
inline std::optional<double> PermutationOptimum(const BipartiteGraph& g,
                                                bool maximize) {
  std::vector<std::size_t> perm(g.num_right());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<double> best;
  do {
    double total = 0.0;
    bool ok = true;
    for (std::size_t l = 0; l < g.num_left() && ok; ++l) {
      const auto w = g.weight(l, perm[l]);
      if (!w) ok = false; else total += *w;
    }
    if (ok && (!best || (maximize ? total > *best : total < *best))) best = total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Best partial matching by enumerating every set of non-conflicting edges.
inline double SubsetMatchingOptimum(const BipartiteGraph& g) {
  std::vector<char> used(g.num_right(), 0);
  std::function<double(std::size_t)> rec = [&](std::size_t l) -> double {
    if (l == g.num_left()) return 0.0;
    double best = rec(l + 1);
    for (std::size_t r = 0; r < g.num_right(); ++r) {
      if (used[r]) continue;
      const auto w = g.weight(l, r);
      if (!w) continue;
      used[r] = 1;
      best = std::max(best, *w + rec(l + 1));
      used[r] = 0;
    }
    return best;
  };
  return rec(0);
}

inline BipartiteGraph RandomGraph(Rng& rng, std::size_t nl, std::size_t nr,
                                  double density, double lo, double hi) {
  BipartiteGraph g(nl, nr);
  for (std::size_t l = 0; l < nl; ++l) {
    for (std::size_t r = 0; r < nr; ++r) {
      if (rng.uniform01() < density) g.add_edge(l, r, rng.uniform(lo, hi));
    }
  }
  return g;
}

// l(X): revenue of the induced assortment, each product at its best slot in
// X, computed directly from weights.
inline double NaiveUtility(const Instance& inst, const ElementSet& x) {
  std::vector<double> best(inst.num_products(), -1.0);
  for (const Element& e : x.elements()) {
    auto& b = best[static_cast<std::size_t>(e.product.value)];
    b = std::max(b, inst.weight(e.product, e.position));
  }
  double num = 0.0;
  double den = x.w0_prime();
  bool any = false;
  for (std::size_t i = 0; i < best.size(); ++i) {
    if (best[i] < 0.0) continue;
    any = true;
    num += inst.revenue(P(static_cast<int>(i))) * best[i];
    den += best[i];
  }
  return any ? num / den : 0.0;
}

// max over every subset of U of l(X).
inline double NaiveBestSubset(const Instance& inst, const ElementSet& u) {
  const auto& el = u.elements();
  double best = 0.0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << el.size()); ++mask) {
    std::vector<Element> chosen;
    for (std::size_t b = 0; b < el.size(); ++b) {
      if (mask >> b & 1) chosen.push_back(el[b]);
    }
    best = std::max(best, NaiveUtility(inst, ElementSet(chosen, u.w0_prime())));
  }
  return best;
}

inline Instance RandomInstance(std::uint64_t seed, IntRange organic,
                               IntRange sponsored, IntRange k,
                               const std::string& constraint = "none",
                               const std::string& valid = "mixed") {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.n_organic = organic;
  cfg.n_sponsored = sponsored;
  cfg.k = k;
  cfg.valid = valid;
  cfg.constraint.type = constraint;
  return generate(cfg);
}

}  // namespace assortment::testing

#endif  // ASSORTMENT_TESTS_TEST_UTIL_H_
