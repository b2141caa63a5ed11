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

// Exhaustive enumerators that certify the solvers on small instances.
// They share only the revenue formulas of the model with the solvers; all
// search is plain enumeration. Budgets are hard limits: an instance over
// budget raises kBudgetExceeded rather than being searched partially.

#ifndef ASSORTMENT_ORACLE_H_
#define ASSORTMENT_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>

#include "assortment/model.h"
#include "assortment/submodular_max.h"
#include "assortment/surrogate.h"

namespace assortment {

struct OracleBudget {
  std::size_t max_products = 7;   // |O| + |S|
  std::size_t max_positions = 6;  // k
  std::size_t max_elements = 20;  // subset enumeration
};

struct OracleSolution {
  Placement placement;
  double revenue = 0.0;
};

struct DecomposedSolution {
  Placement placement;
  double revenue = 0.0;
  double part_sponsored = 0.0;  // revenue earned on sponsored products
  double part_organic = 0.0;    // revenue earned on organic products
};

struct SubsetSolution {
  ElementSet chosen;
  double value = 0.0;
};

// Calls `visit` for every placement that puts each sponsored product in a
// valid slot and fills each organic slot with a distinct organic product or
// leaves it empty (organic slots stay empty when include_organics is false).
// Ignores the organic constraint family. Returns the number visited.
std::uint64_t enumerate_placements(
    const Instance& inst, bool include_organics,
    const std::function<void(const Placement&)>& visit);

// Number of valid bijections of sponsored products onto reserved slots.
std::uint64_t count_sponsored_assignments(const Instance& inst);

// Best placement for the unconstrained problem.
OracleSolution oracle_p0(const Instance& inst, const OracleBudget& budget = {});

// Best placement whose organic set belongs to the organic family, with its
// revenue split into sponsored and organic shares.
DecomposedSolution oracle_p2(const Instance& inst,
                             const OracleBudget& budget = {});

// Best organic-only placement (organic set in the family) under an outside
// option of weight w0_prime.
OracleSolution oracle_p5(const Instance& inst, double w0_prime,
                         const OracleBudget& budget = {});

// Best feasible subset of `ground` for min{h(U), threshold}, with h itself
// evaluated by subset enumeration.
SubsetSolution oracle_p6(const Instance& inst, const ElementSet& ground,
                         const SurrogateObjective& objective,
                         const FeasibilitySystem& sys,
                         const OracleBudget& budget = {});

// h(U) by enumerating all 2^|U| subsets (first maximizer in mask order).
BestSubset oracle_best_subset(const Instance& inst, const ElementSet& u,
                              const OracleBudget& budget = {});

}  // namespace assortment

#endif  // ASSORTMENT_ORACLE_H_
