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

// Approximate revenue maximization when the shown organic set must belong to
// a downward-closed family.
//
// Two candidates are built and the better one is returned:
//
//   * Sponsored-only: the exact optimum among placements showing no organic
//     product. Its revenue dominates the sponsored share of the optimum.
//   * Min-weight sponsored + organic: sponsored products are placed to
//     minimize their total weight, that weight is folded into the outside
//     option (w0' = w0 + weight), and an organic assortment is chosen for w0'
//     by maximizing min{h(U), r} over (product, slot) elements. The threshold
//     r, the smallest revenue in the unknown optimal organic assortment, is
//     guessed over every distinct organic revenue.
//
// If the organic step is a beta-approximation, the better candidate earns at
// least beta / (beta + 1) of the optimum.

#ifndef ASSORTMENT_CONSTRAINED_SOLVER_H_
#define ASSORTMENT_CONSTRAINED_SOLVER_H_

#include <optional>
#include <string_view>
#include <vector>

#include "assortment/model.h"
#include "assortment/submodular_max.h"
#include "assortment/surrogate.h"

namespace assortment {

enum class CandidateRole { kSponsoredOnly, kMinWeightPlusOrganic };

std::string_view CandidateRoleName(CandidateRole role);

// Outcome of one threshold guess of the organic step.
struct ThresholdGuess {
  std::optional<double> threshold;  // nullopt: show no organic product
  std::size_t ground_size = 0;
  double surrogate_value = 0.0;
  double organic_revenue = 0.0;  // f' of the extracted organic placement
  MaximizerMethod method = MaximizerMethod::kGreedy;
};

struct OrganicStep {
  double sponsored_weight = 0.0;  // total weight of the min-weight placement
  double w0_prime = 0.0;
  std::optional<double> chosen_threshold;
  double surrogate_value = 0.0;
  double organic_revenue = 0.0;  // f'(organic placement) under w0_prime
  double guarantee_beta = 1.0;
  ElementSet chosen;     // maximizer output U
  ElementSet extracted;  // best threshold subset V of U
  Placement organic_placement;
  std::vector<ThresholdGuess> guesses;
};

struct CandidateReport {
  Placement placement;
  double revenue = 0.0;
  CandidateRole role = CandidateRole::kSponsoredOnly;
  std::optional<OrganicStep> organic;  // set for the second candidate
};

struct CombinedReport {
  CandidateReport best;
  std::vector<CandidateReport> both;
  double beta_used = 1.0;
  double guaranteed_ratio() const { return beta_used / (beta_used + 1.0); }
};

// Optimal sponsored-only placement.
CandidateReport candidate_one(const Instance& inst);

struct SponsoredAssignment {
  Placement placement;
  double total_weight = 0.0;
};

// Valid sponsored placement of minimum total weight.
SponsoredAssignment min_weight_sponsored(const Instance& inst);

// Organic assortment on top of an outside option of weight w0_prime, chosen
// through the surrogate maximization and threshold guessing.
OrganicStep solve_organic_step(const Instance& inst, double w0_prime,
                               const MaximizerOptions& options = {});

CandidateReport candidate_two(const Instance& inst,
                              const MaximizerOptions& options = {});

// Both candidates and the better of the two (ties favour the sponsored-only
// candidate). Throws kInfeasibleSponsoredAssignment when the sponsored
// products cannot all be placed.
CombinedReport solve_constrained(const Instance& inst,
                                 const MaximizerOptions& options = {});

}  // namespace assortment

#endif  // ASSORTMENT_CONSTRAINED_SOLVER_H_
