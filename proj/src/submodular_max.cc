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

#include "assortment/submodular_max.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "assortment/error.h"

namespace assortment {
namespace {

std::size_t Idx(ProductId i) { return static_cast<std::size_t>(i.value); }

// Value of min{h(U), r} for a set and its one-element extensions.
class SurrogateEvaluator {
 public:
  SurrogateEvaluator(const Instance& inst, double w0_prime, double threshold)
      : inst_(inst), w0_prime_(w0_prime), threshold_(threshold) {}

  double value(const ElementSet& u) const {
    return std::min(best_subset(inst_, u).value, threshold_);
  }

  double value_with(const ElementSet& u, const Element& extra) const {
    std::vector<internal::ProductWeight> items;
    items.reserve(u.size() + 1);
    auto absorb = [&](const Element& e) {
      const double w = inst_.weight(e.product, e.position);
      for (auto& item : items) {
        if (item.product == e.product) {
          item.weight = std::max(item.weight, w);
          return;
        }
      }
      items.push_back({inst_.revenue(e.product), w, e.product});
    };
    for (const auto& e : u.elements()) absorb(e);
    absorb(extra);
    return std::min(internal::scan_thresholds(items, w0_prime_).value,
                    threshold_);
  }

 private:
  const Instance& inst_;
  double w0_prime_;
  double threshold_;
};

enum class Score { kGain, kDensity };

struct GreedyRun {
  ElementSet chosen;
  double value = 0.0;
  std::vector<double> trace;
};

double ElementCost(const FeasibilitySystem& sys, const Element& e) {
  if (const auto* k = std::get_if<KnapsackSystem>(&sys.second)) {
    return k->cost.at(Idx(e.product));
  }
  return 0.0;
}

// Lazy greedy: candidates sit in a max-heap keyed by a stale upper bound on
// their score; a candidate whose score was computed in the current round is
// the true maximizer. Ties go to the lowest element.
GreedyRun RunGreedy(const SurrogateEvaluator& eval,
                    const std::vector<Element>& ground,
                    const FeasibilitySystem& sys, Score score,
                    ElementSet seed) {
  struct Entry {
    double primary;
    double gain;
    std::size_t index;
    std::size_t round;
  };
  auto worse = [](const Entry& a, const Entry& b) {
    if (a.primary != b.primary) return a.primary < b.primary;
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.index > b.index;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);

  GreedyRun run;
  run.chosen = std::move(seed);
  run.value = eval.value(run.chosen);
  auto score_of = [&](std::size_t idx) -> std::optional<Entry> {
    const Element& e = ground[idx];
    if (run.chosen.contains(e) || !sys.admits(run.chosen.with(e))) {
      return std::nullopt;  // infeasible now means infeasible forever
    }
    const double gain = eval.value_with(run.chosen, e) - run.value;
    double primary = gain;
    if (score == Score::kDensity) {
      const double cost = ElementCost(sys, e);
      primary = cost > 0.0 ? gain / cost
                           : (gain > 0.0 ? std::numeric_limits<double>::infinity()
                                         : gain);
    }
    return Entry{primary, gain, idx, 0};
  };

  std::size_t round = 0;
  for (std::size_t idx = 0; idx < ground.size(); ++idx) {
    if (auto entry = score_of(idx)) heap.push(*entry);
  }
  while (!heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    if (top.round != round) {
      if (auto fresh = score_of(top.index)) {
        fresh->round = round;
        heap.push(*fresh);
      }
      continue;
    }
    if (!(top.gain > 0.0)) break;
    run.chosen.insert(ground[top.index]);
    run.value = eval.value(run.chosen);
    run.trace.push_back(run.value);
    ++round;
  }
  return run;
}

struct Candidate {
  ElementSet chosen;
  double value = 0.0;
  MaximizerMethod method = MaximizerMethod::kGreedy;
  std::vector<double> trace;
};

void KeepBetter(std::optional<Candidate>& best, Candidate c) {
  if (!best || c.value > best->value) best = std::move(c);
}

Candidate BestSingleton(const SurrogateEvaluator& eval,
                        const std::vector<Element>& ground,
                        const FeasibilitySystem& sys, double w0_prime) {
  Candidate best{ElementSet(w0_prime), 0.0, MaximizerMethod::kBestSingleton,
                 {}};
  const ElementSet empty(w0_prime);
  for (const auto& e : ground) {
    const ElementSet single = empty.with(e);
    if (!sys.admits(single)) continue;
    const double v = eval.value(single);
    if (v > best.value) {
      best.value = v;
      best.chosen = single;
    }
  }
  return best;
}

// Add/swap local search: insert one element, dropping up to two chosen ones
// to restore feasibility. Accepts only (1 + eps) improvements.
Candidate LocalSearch(const SurrogateEvaluator& eval,
                      const std::vector<Element>& ground,
                      const FeasibilitySystem& sys, Candidate start,
                      double epsilon) {
  Candidate current = std::move(start);
  constexpr int kMaxMoves = 1000;
  for (int move = 0; move < kMaxMoves; ++move) {
    bool improved = false;
    const auto& chosen = current.chosen.elements();
    for (const auto& e : ground) {
      if (current.chosen.contains(e)) continue;
      std::vector<std::vector<std::size_t>> drops = {{}};
      for (std::size_t a = 0; a < chosen.size(); ++a) {
        drops.push_back({a});
        for (std::size_t b = a + 1; b < chosen.size(); ++b) {
          drops.push_back({a, b});
        }
      }
      for (const auto& drop : drops) {
        ElementSet next = current.chosen;
        for (std::size_t d : drop) next.erase(chosen[d]);
        next.insert(e);
        if (!sys.admits(next)) continue;
        const double v = eval.value(next);
        if (v > (1.0 + epsilon) * current.value && v > current.value) {
          current.chosen = std::move(next);
          current.value = v;
          current.method = MaximizerMethod::kLocalSearch;
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
    if (!improved) break;
  }
  return current;
}

std::vector<std::vector<ProductId>> MaximalSets(const ExplicitSystem& sys) {
  std::vector<std::vector<ProductId>> out;
  for (const auto& a : sys.sets) {
    bool maximal = true;
    for (const auto& b : sys.sets) {
      if (b.size() > a.size() &&
          std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  return out;
}

}  // namespace

bool FeasibilitySystem::admits(const ElementSet& u) const {
  std::set<std::int32_t> slots;
  for (const auto& e : u.elements()) {
    if (!slots.insert(e.position.value).second) return false;
  }
  struct Visitor {
    const ElementSet& u;
    bool operator()(const std::monostate&) const { return true; }
    bool operator()(const KnapsackSystem& k) const {
      double total = 0.0;
      for (const auto& e : u.elements()) total += k.cost.at(Idx(e.product));
      return total <= k.capacity;
    }
    bool operator()(const PartitionSystem& p) const {
      std::vector<int> used(p.caps.size(), 0);
      for (const auto& e : u.elements()) {
        const int g = p.group_of.at(Idx(e.product));
        if (g < 0 || static_cast<std::size_t>(g) >= p.caps.size()) return false;
        if (++used[static_cast<std::size_t>(g)] >
            p.caps[static_cast<std::size_t>(g)]) {
          return false;
        }
      }
      return true;
    }
    bool operator()(const ExplicitSystem& x) const {
      const std::vector<ProductId> products = u.products();
      return std::binary_search(x.sets.begin(), x.sets.end(), products);
    }
  };
  return std::visit(Visitor{u}, second);
}

std::string_view FeasibilitySystem::name() const {
  switch (second.index()) {
    case 0:
      return "slots";
    case 1:
      return "slots+knapsack";
    case 2:
      return "slots+partition";
    default:
      return "slots+explicit";
  }
}

FeasibilitySystem FeasibilitySystem::from_instance(const Instance& inst) {
  struct Visitor {
    const Instance& inst;
    FeasibilitySystem operator()(const Unconstrained&) const { return {}; }
    FeasibilitySystem operator()(const KnapsackConstraint& k) const {
      return {KnapsackSystem{k.cost, k.capacity}};
    }
    FeasibilitySystem operator()(const PartitionMatroidConstraint& p) const {
      return {PartitionSystem{p.group_of, p.caps}};
    }
    FeasibilitySystem operator()(const CardinalityConstraint& c) const {
      PartitionSystem p;
      p.group_of.assign(inst.num_products(), -1);
      for (ProductId i : inst.organic()) p.group_of[Idx(i)] = 0;
      p.caps = {c.max};
      return {std::move(p)};
    }
    FeasibilitySystem operator()(const ExplicitFamily& e) const {
      return {ExplicitSystem{e.sets}};
    }
  };
  return std::visit(Visitor{inst}, inst.organic_constraint().variant());
}

std::string_view MaximizerMethodName(MaximizerMethod method) {
  switch (method) {
    case MaximizerMethod::kGreedy:
      return "greedy";
    case MaximizerMethod::kDensityGreedy:
      return "density_greedy";
    case MaximizerMethod::kBestSingleton:
      return "best_singleton";
    case MaximizerMethod::kLocalSearch:
      return "local_search";
    case MaximizerMethod::kBrute:
      return "brute";
  }
  return "unknown";
}

double guarantee_for(const FeasibilitySystem& sys) {
  switch (sys.second.index()) {
    case 0:  // one matroid
    case 3:  // one matroid per maximal listed set
      return 1.0 / 2.0;
    default:  // two matroids, or matroid + knapsack portfolio
      return 1.0 / 3.0;
  }
}

MaximizerResult maximize(const Instance& inst, const ElementSet& ground,
                         const SurrogateObjective& objective,
                         const FeasibilitySystem& sys,
                         const MaximizerOptions& options) {
  validate_element_set(inst, ground);
  const double w0_prime = ground.w0_prime();
  const SurrogateEvaluator eval(inst, w0_prime, objective.r_threshold);
  const std::vector<Element>& elements = ground.elements();

  std::optional<Candidate> best;
  auto greedy = [&](const std::vector<Element>& pool, Score score,
                    ElementSet seed, MaximizerMethod tag) {
    GreedyRun run = RunGreedy(eval, pool, sys, score, std::move(seed));
    return Candidate{std::move(run.chosen), run.value, tag,
                     std::move(run.trace)};
  };

  if (const auto* listed = std::get_if<ExplicitSystem>(&sys.second)) {
    for (const auto& allowed : MaximalSets(*listed)) {
      std::vector<Element> pool;
      for (const auto& e : elements) {
        if (std::binary_search(allowed.begin(), allowed.end(), e.product)) {
          pool.push_back(e);
        }
      }
      KeepBetter(best, greedy(pool, Score::kGain, ElementSet(w0_prime),
                              MaximizerMethod::kGreedy));
    }
  } else {
    KeepBetter(best, greedy(elements, Score::kGain, ElementSet(w0_prime),
                            MaximizerMethod::kGreedy));
  }

  if (std::holds_alternative<KnapsackSystem>(sys.second)) {
    KeepBetter(best, greedy(elements, Score::kDensity, ElementSet(w0_prime),
                            MaximizerMethod::kDensityGreedy));
    KeepBetter(best, BestSingleton(eval, elements, sys, w0_prime));

    // Seeded completions from the most valuable feasible singletons.
    std::vector<std::pair<double, std::size_t>> singles;
    const ElementSet empty(w0_prime);
    for (std::size_t idx = 0; idx < elements.size(); ++idx) {
      const ElementSet single = empty.with(elements[idx]);
      if (sys.admits(single)) singles.emplace_back(eval.value(single), idx);
    }
    std::stable_sort(singles.begin(), singles.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    const std::size_t seeds = std::min(options.knapsack_seeds, singles.size());
    for (std::size_t s = 0; s < seeds; ++s) {
      if (!(singles[s].first > 0.0)) break;
      KeepBetter(best, greedy(elements, Score::kDensity,
                              empty.with(elements[singles[s].second]),
                              MaximizerMethod::kDensityGreedy));
    }
  }

  Candidate winner = best ? std::move(*best)
                          : Candidate{ElementSet(w0_prime), 0.0,
                                      MaximizerMethod::kGreedy, {}};
  if (options.local_search) {
    winner = LocalSearch(eval, elements, sys, std::move(winner),
                         options.local_search_epsilon);
  }

  MaximizerResult result;
  result.chosen = std::move(winner.chosen);
  result.value = eval.value(result.chosen);
  result.guarantee_beta = guarantee_for(sys);
  result.method = winner.method;
  result.trace = std::move(winner.trace);
  return result;
}

MaximizerResult brute_force_maximize(const Instance& inst,
                                     const ElementSet& ground,
                                     const SurrogateObjective& objective,
                                     const FeasibilitySystem& sys) {
  validate_element_set(inst, ground);
  const std::size_t m = ground.size();
  if (m > kBruteForceMaxElements) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "brute force limited to " +
                    std::to_string(kBruteForceMaxElements) + " elements, got " +
                    std::to_string(m));
  }
  const auto& elements = ground.elements();
  // Elements sharing a slot; a subset may take at most one from each group.
  std::vector<std::uint32_t> slot_masks;
  {
    std::vector<std::pair<std::int32_t, std::uint32_t>> by_slot;
    for (std::size_t b = 0; b < m; ++b) {
      const auto slot = elements[b].position.value;
      auto it = std::find_if(by_slot.begin(), by_slot.end(),
                             [&](const auto& p) { return p.first == slot; });
      if (it == by_slot.end()) {
        by_slot.emplace_back(slot, 1u << b);
      } else {
        it->second |= 1u << b;
      }
    }
    for (const auto& [slot, mask] : by_slot) slot_masks.push_back(mask);
  }

  const SurrogateEvaluator eval(inst, ground.w0_prime(), objective.r_threshold);
  MaximizerResult result;
  result.chosen = ElementSet(ground.w0_prime());
  result.value = 0.0;
  result.guarantee_beta = 1.0;
  result.method = MaximizerMethod::kBrute;
  const std::uint32_t limit = m == 0 ? 1u : (1u << m);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    bool slots_ok = true;
    for (std::uint32_t sm : slot_masks) {
      const std::uint32_t hit = mask & sm;
      if (hit & (hit - 1)) {
        slots_ok = false;
        break;
      }
    }
    if (!slots_ok) continue;
    std::vector<Element> chosen;
    for (std::size_t b = 0; b < m; ++b) {
      if (mask & (1u << b)) chosen.push_back(elements[b]);
    }
    ElementSet u(std::move(chosen), ground.w0_prime());
    if (!sys.admits(u)) continue;
    const double v = eval.value(u);
    if (v > result.value) {
      result.value = v;
      result.chosen = std::move(u);
    }
  }
  return result;
}

}  // namespace assortment
