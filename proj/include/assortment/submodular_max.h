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

// Maximization of the truncated surrogate min{h(U), r} over element sets
// that use each organic slot at most once and satisfy one more
// downward-closed constraint derived from the organic family.
//
// Approximation guarantees of the implemented methods, for monotone
// submodular objectives:
//   slot cap only            greedy                         1/2
//   slot cap + partition     greedy (two matroids)          1/3
//   slot cap + knapsack      best of greedy, density greedy
//                            (also seeded), best singleton  1/3 (*)
//   slot cap + explicit      greedy per maximal listed set  1/2
// (*) checked empirically against brute force, not a proven bound.

#ifndef ASSORTMENT_SUBMODULAR_MAX_H_
#define ASSORTMENT_SUBMODULAR_MAX_H_

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "assortment/model.h"
#include "assortment/surrogate.h"

namespace assortment {

// Every element pays the cost of its product.
struct KnapsackSystem {
  std::vector<double> cost;  // indexed by ProductId
  double capacity = 0.0;
};

// Elements are grouped by the group of their product.
struct PartitionSystem {
  std::vector<int> group_of;  // indexed by ProductId
  std::vector<int> caps;
};

// The products of the set must form a listed (downward-closed) family member.
struct ExplicitSystem {
  std::vector<std::vector<ProductId>> sets;  // sorted, closed under subsets
};

struct FeasibilitySystem {
  std::variant<std::monostate, KnapsackSystem, PartitionSystem, ExplicitSystem>
      second;

  // At most one element per slot, and the second constraint.
  bool admits(const ElementSet& u) const;
  std::string_view name() const;

  // Element-level system for the instance's organic constraint family.
  // Cardinality bounds become a single-group partition.
  static FeasibilitySystem from_instance(const Instance& inst);
};

enum class MaximizerMethod {
  kGreedy,
  kDensityGreedy,
  kBestSingleton,
  kLocalSearch,
  kBrute,
};

std::string_view MaximizerMethodName(MaximizerMethod method);

struct MaximizerResult {
  ElementSet chosen;
  double value = 0.0;
  double guarantee_beta = 1.0;
  MaximizerMethod method = MaximizerMethod::kGreedy;
  // Surrogate value after each greedy addition of the winning run (empty
  // for brute force and singletons).
  std::vector<double> trace;
};

struct MaximizerOptions {
  // Follows greedy with add/swap local search; moves must improve the value
  // by a factor (1 + local_search_epsilon).
  bool local_search = false;
  double local_search_epsilon = 0.01;
  // Number of best singletons used as seeds for density greedy (knapsack).
  std::size_t knapsack_seeds = 8;
};

// Guarantee the portfolio reports for the given system.
double guarantee_for(const FeasibilitySystem& sys);

MaximizerResult maximize(const Instance& inst, const ElementSet& ground,
                         const SurrogateObjective& objective,
                         const FeasibilitySystem& sys,
                         const MaximizerOptions& options = {});

inline constexpr std::size_t kBruteForceMaxElements = 20;

// Exact maximum by enumerating all subsets of the ground set.
// kGroundSetTooLarge above kBruteForceMaxElements elements.
MaximizerResult brute_force_maximize(const Instance& inst,
                                     const ElementSet& ground,
                                     const SurrogateObjective& objective,
                                     const FeasibilitySystem& sys);

}  // namespace assortment

#endif  // ASSORTMENT_SUBMODULAR_MAX_H_
