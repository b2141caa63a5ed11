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

#include "assortment/constrained_solver.h"

#include <algorithm>
#include <functional>

#include "assortment/error.h"
#include "assortment/exact_solver.h"
#include "assortment/matching.h"

namespace assortment {

std::string_view CandidateRoleName(CandidateRole role) {
  switch (role) {
    case CandidateRole::kSponsoredOnly:
      return "candidate_I";
    case CandidateRole::kMinWeightPlusOrganic:
      return "candidate_II";
  }
  return "unknown";
}

CandidateReport candidate_one(const Instance& inst) {
  ExactSolution sol = solve_sponsored_only(inst);
  CandidateReport report;
  report.placement = std::move(sol.placement);
  report.revenue = sol.revenue;
  report.role = CandidateRole::kSponsoredOnly;
  return report;
}

SponsoredAssignment min_weight_sponsored(const Instance& inst) {
  const auto& sponsored = inst.sponsored();
  const auto& reserved = inst.reserved_positions();
  BipartiteGraph g(sponsored.size(), reserved.size());
  for (std::size_t a = 0; a < sponsored.size(); ++a) {
    for (std::size_t b = 0; b < reserved.size(); ++b) {
      if (inst.is_valid_position(sponsored[a], reserved[b])) {
        g.add_edge(a, b, inst.weight(sponsored[a], reserved[b]));
      }
    }
  }
  Matching m;
  try {
    m = min_weight_perfect_matching(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoPerfectMatching) throw;
    throw Error(ErrorCode::kInfeasibleSponsoredAssignment,
                "sponsored products cannot all be placed in valid slots");
  }
  SponsoredAssignment out;
  for (const auto& p : m.pairs) {
    out.placement.assign(reserved[p.right], sponsored[p.left]);
  }
  out.total_weight = m.total_weight;
  return out;
}

OrganicStep solve_organic_step(const Instance& inst, double w0_prime,
                               const MaximizerOptions& options) {
  const FeasibilitySystem sys = FeasibilitySystem::from_instance(inst);

  OrganicStep step;
  step.w0_prime = w0_prime;
  step.sponsored_weight = w0_prime - inst.no_purchase_weight();
  step.guarantee_beta = guarantee_for(sys);
  step.chosen = ElementSet(w0_prime);
  step.extracted = ElementSet(w0_prime);
  // Baseline guess: no organic product at all.
  step.guesses.push_back({std::nullopt, 0, 0.0, 0.0, MaximizerMethod::kGreedy});

  std::vector<double> thresholds;
  if (!inst.organic_positions().empty()) {
    for (ProductId i : inst.organic()) thresholds.push_back(inst.revenue(i));
  }
  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  // Each guess is independent; descending order plus a strict comparison
  // keeps the larger threshold on ties.
  for (double r : thresholds) {
    const ElementSet ground = ground_set(inst, w0_prime, r);
    MaximizerResult res =
        maximize(inst, ground, SurrogateObjective{r}, sys, options);
    BestSubset v = best_subset(inst, res.chosen);
    Placement organic = best_position_placement(inst, v.subset);
    const double revenue = expected_revenue_with_w0(inst, organic, w0_prime);
    step.guesses.push_back({r, ground.size(), res.value, revenue, res.method});
    if (revenue > step.organic_revenue) {
      step.chosen_threshold = r;
      step.surrogate_value = res.value;
      step.organic_revenue = revenue;
      step.chosen = std::move(res.chosen);
      step.extracted = std::move(v.subset);
      step.organic_placement = std::move(organic);
    }
  }
  return step;
}

CandidateReport candidate_two(const Instance& inst,
                              const MaximizerOptions& options) {
  SponsoredAssignment sponsored = min_weight_sponsored(inst);
  const double w0_prime = inst.no_purchase_weight() + sponsored.total_weight;
  OrganicStep organic = solve_organic_step(inst, w0_prime, options);

  CandidateReport report;
  report.role = CandidateRole::kMinWeightPlusOrganic;
  report.placement = sponsored.placement.merged_with(organic.organic_placement);
  report.revenue = expected_revenue(inst, report.placement);
  report.organic = std::move(organic);
  return report;
}

CombinedReport solve_constrained(const Instance& inst,
                                 const MaximizerOptions& options) {
  CombinedReport report;
  report.both.push_back(candidate_one(inst));
  report.both.push_back(candidate_two(inst, options));
  report.beta_used = report.both[1].organic->guarantee_beta;
  report.best = report.both[0].revenue >= report.both[1].revenue
                    ? report.both[0]
                    : report.both[1];
  return report;
}

}  // namespace assortment
