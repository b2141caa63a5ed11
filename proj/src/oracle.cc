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

#include "assortment/oracle.h"

#include <algorithm>
#include <string>
#include <vector>

#include "assortment/error.h"

namespace assortment {
namespace {

[[noreturn]] void OverBudget(const std::string& what) {
  throw Error(ErrorCode::kBudgetExceeded, "oracle budget exceeded: " + what);
}

void CheckPlacementBudget(const Instance& inst, const OracleBudget& budget) {
  if (inst.num_products() > budget.max_products) {
    OverBudget(std::to_string(inst.num_products()) + " products > " +
               std::to_string(budget.max_products));
  }
  if (inst.num_positions() > budget.max_positions) {
    OverBudget(std::to_string(inst.num_positions()) + " slots > " +
               std::to_string(budget.max_positions));
  }
}

// All valid sponsored bijections, in lexicographic slot order.
std::vector<std::vector<Assignment>> SponsoredAssignments(const Instance& inst) {
  std::vector<std::vector<Assignment>> out;
  const auto& sponsored = inst.sponsored();
  std::vector<Assignment> current;
  std::vector<char> taken(inst.num_positions() + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t a) {
    if (a == sponsored.size()) {
      out.push_back(current);
      return;
    }
    for (PositionId t : inst.valid_positions(sponsored[a])) {
      if (taken[static_cast<std::size_t>(t.value)]) continue;
      taken[static_cast<std::size_t>(t.value)] = 1;
      current.push_back({t, sponsored[a]});
      rec(a + 1);
      current.pop_back();
      taken[static_cast<std::size_t>(t.value)] = 0;
    }
  };
  rec(0);
  return out;
}

// All partial injections of organic products into organic slots: each slot
// is either left empty or given an unused product.
std::vector<std::vector<Assignment>> OrganicAssignments(const Instance& inst) {
  std::vector<std::vector<Assignment>> out;
  const auto& organic = inst.organic();
  const auto& slots = inst.organic_positions();
  std::vector<Assignment> current;
  std::vector<char> used(organic.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == slots.size()) {
      out.push_back(current);
      return;
    }
    rec(b + 1);
    for (std::size_t a = 0; a < organic.size(); ++a) {
      if (used[a]) continue;
      used[a] = 1;
      current.push_back({slots[b], organic[a]});
      rec(b + 1);
      current.pop_back();
      used[a] = 0;
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::uint64_t enumerate_placements(
    const Instance& inst, bool include_organics,
    const std::function<void(const Placement&)>& visit) {
  const auto sponsored = SponsoredAssignments(inst);
  const auto organic = include_organics
                           ? OrganicAssignments(inst)
                           : std::vector<std::vector<Assignment>>{{}};
  std::uint64_t count = 0;
  for (const auto& s : sponsored) {
    for (const auto& o : organic) {
      std::vector<Assignment> entries = s;
      entries.insert(entries.end(), o.begin(), o.end());
      visit(Placement(std::move(entries)));
      ++count;
    }
  }
  return count;
}

std::uint64_t count_sponsored_assignments(const Instance& inst) {
  return SponsoredAssignments(inst).size();
}

OracleSolution oracle_p0(const Instance& inst, const OracleBudget& budget) {
  CheckPlacementBudget(inst, budget);
  OracleSolution best;
  bool any = false;
  enumerate_placements(inst, true, [&](const Placement& pl) {
    const double f = expected_revenue(inst, pl);
    if (!any || f > best.revenue) {
      best = {pl, f};
      any = true;
    }
  });
  if (!any) {
    throw Error(ErrorCode::kInfeasibleSponsoredAssignment,
                "sponsored products cannot all be placed in valid slots");
  }
  return best;
}

DecomposedSolution oracle_p2(const Instance& inst, const OracleBudget& budget) {
  CheckPlacementBudget(inst, budget);
  DecomposedSolution best;
  bool any = false;
  enumerate_placements(inst, true, [&](const Placement& pl) {
    if (!inst.organic_constraint().admits(organic_products(inst, pl))) return;
    const RevenueSplit split = revenue_split(inst, pl);
    if (!any || split.total > best.revenue) {
      best = {pl, split.total, split.sponsored, split.organic};
      any = true;
    }
  });
  if (!any) {
    throw Error(ErrorCode::kInfeasibleSponsoredAssignment,
                "sponsored products cannot all be placed in valid slots");
  }
  return best;
}

OracleSolution oracle_p5(const Instance& inst, double w0_prime,
                         const OracleBudget& budget) {
  if (inst.organic().size() > budget.max_products) {
    OverBudget(std::to_string(inst.organic().size()) + " organic products > " +
               std::to_string(budget.max_products));
  }
  if (inst.organic_positions().size() > budget.max_positions) {
    OverBudget(std::to_string(inst.organic_positions().size()) +
               " organic slots > " + std::to_string(budget.max_positions));
  }
  OracleSolution best;
  for (const auto& entries : OrganicAssignments(inst)) {
    Placement pl(entries);
    if (!inst.organic_constraint().admits(organic_products(inst, pl))) continue;
    const double f = expected_revenue_with_w0(inst, pl, w0_prime);
    if (f > best.revenue) best = {std::move(pl), f};
  }
  return best;
}

BestSubset oracle_best_subset(const Instance& inst, const ElementSet& u,
                              const OracleBudget& budget) {
  if (u.size() > budget.max_elements) {
    OverBudget(std::to_string(u.size()) + " elements > " +
               std::to_string(budget.max_elements));
  }
  const auto& elements = u.elements();
  BestSubset best{ElementSet(u.w0_prime()), 0.0};
  const std::uint64_t limit = std::uint64_t{1} << elements.size();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    std::vector<Element> chosen;
    for (std::size_t b = 0; b < elements.size(); ++b) {
      if (mask & (std::uint64_t{1} << b)) chosen.push_back(elements[b]);
    }
    ElementSet x(std::move(chosen), u.w0_prime());
    const double value = set_utility(inst, x);
    if (value > best.value) best = {std::move(x), value};
  }
  return best;
}

SubsetSolution oracle_p6(const Instance& inst, const ElementSet& ground,
                         const SurrogateObjective& objective,
                         const FeasibilitySystem& sys,
                         const OracleBudget& budget) {
  if (ground.size() > budget.max_elements) {
    OverBudget(std::to_string(ground.size()) + " elements > " +
               std::to_string(budget.max_elements));
  }
  const auto& elements = ground.elements();
  SubsetSolution best{ElementSet(ground.w0_prime()), 0.0};
  ElementSet current(ground.w0_prime());
  // Include/exclude search; an infeasible set has no feasible superset.
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == elements.size()) return;
    ElementSet grown = current.with(elements[idx]);
    if (sys.admits(grown)) {
      const double h = oracle_best_subset(inst, grown, budget).value;
      const double value = std::min(h, objective.r_threshold);
      if (value > best.value) best = {grown, value};
      std::swap(current, grown);
      rec(idx + 1);
      std::swap(current, grown);
    }
    rec(idx + 1);
  };
  rec(0);
  return best;
}

}  // namespace assortment
