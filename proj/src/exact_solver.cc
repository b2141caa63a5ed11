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

#include "assortment/exact_solver.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "assortment/error.h"
#include "assortment/matching.h"

namespace assortment {
namespace {

ParametricStep InnerStep(const Instance& inst, double lambda,
                         bool with_organics) {
  const auto& sponsored = inst.sponsored();
  const auto& reserved = inst.reserved_positions();
  BipartiteGraph sponsored_block(sponsored.size(), reserved.size());
  for (std::size_t a = 0; a < sponsored.size(); ++a) {
    const ProductId i = sponsored[a];
    const double margin = inst.revenue(i) - lambda;
    for (std::size_t b = 0; b < reserved.size(); ++b) {
      if (inst.is_valid_position(i, reserved[b])) {
        sponsored_block.add_edge(a, b, margin * inst.weight(i, reserved[b]));
      }
    }
  }

  const std::vector<ProductId> no_products;
  const auto& organic = with_organics ? inst.organic() : no_products;
  const auto& slots = inst.organic_positions();
  BipartiteGraph organic_block(organic.size(), slots.size());
  for (std::size_t a = 0; a < organic.size(); ++a) {
    const ProductId i = organic[a];
    const double margin = inst.revenue(i) - lambda;
    for (std::size_t b = 0; b < slots.size(); ++b) {
      const double value = margin * inst.weight(i, slots[b]);
      if (value > 0.0) organic_block.add_edge(a, b, value);
    }
  }

  std::pair<Matching, Matching> blocks;
  try {
    blocks = constrained_perfect_then_partial(sponsored_block, organic_block,
                                              Objective::kMaximize);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoPerfectMatching) throw;
    throw Error(ErrorCode::kInfeasibleSponsoredAssignment,
                "sponsored products cannot all be placed in valid slots");
  }

  ParametricStep step;
  step.lambda = lambda;
  for (const auto& p : blocks.first.pairs) {
    step.placement.assign(reserved[p.right], sponsored[p.left]);
  }
  for (const auto& p : blocks.second.pairs) {
    step.placement.assign(slots[p.right], organic[p.left]);
  }
  step.inner_value = blocks.first.total_weight + blocks.second.total_weight -
                     lambda * inst.no_purchase_weight();
  return step;
}

ExactSolution Solve(const Instance& inst, const ExactSolverOptions& options,
                    bool with_organics) {
  const std::size_t products =
      inst.sponsored().size() + (with_organics ? inst.organic().size() : 0);
  const std::size_t cap =
      std::max<std::size_t>(10, 10 * products * inst.num_positions());

  ExactSolution solution;
  double lambda = 0.0;
  for (std::size_t iter = 0; iter < cap; ++iter) {
    ParametricStep step = InnerStep(inst, lambda, with_organics);
    const bool repeated = !solution.trace.iterations.empty() &&
                          step.placement == solution.placement;
    solution.trace.iterations.push_back(step);
    if (step.inner_value <= options.tolerance || repeated) {
      if (iter == 0) {
        // F(0) <= tol: nothing earns revenue; the maximizer is optimal.
        solution.placement = step.placement;
        solution.revenue = expected_revenue(inst, solution.placement);
      }
      solution.trace.converged = true;
      return solution;
    }
    const double next = expected_revenue(inst, step.placement);
    solution.placement = std::move(step.placement);
    solution.revenue = next;
    if (!(next > lambda)) {
      // F(lambda) > 0 guarantees f(x) > lambda in exact arithmetic; only
      // rounding can get here, and lambda is then already optimal.
      solution.trace.converged = true;
      return solution;
    }
    lambda = next;
  }
  throw Error(ErrorCode::kConvergenceFailure,
              "parametric iteration did not converge within " +
                  std::to_string(cap) + " steps");
}

}  // namespace

ParametricStep inner_parametric_step(const Instance& inst, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::kInvalidArgument,
                "lambda must be nonnegative and finite");
  }
  return InnerStep(inst, lambda, /*with_organics=*/true);
}

ExactSolution solve_exact(const Instance& inst,
                          const ExactSolverOptions& options) {
  return Solve(inst, options, /*with_organics=*/true);
}

ExactSolution solve_sponsored_only(const Instance& inst,
                                   const ExactSolverOptions& options) {
  return Solve(inst, options, /*with_organics=*/false);
}

}  // namespace assortment
