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

// Exact revenue maximization without organic constraints.
//
// The expected revenue of a placement is a ratio N(x) / D(x) of two linear
// functions of the assignment variables, with
//   N(x) = sum r_i w(i,t) x_it,   D(x) = w0 + sum w(i,t) x_it.
// Dinkelbach's method maximizes it by solving a sequence of linear problems
//   F(lambda) = max_x N(x) - lambda D(x)
// over the same assignment polytope and updating lambda to the ratio of the
// maximizer until F(lambda) vanishes. Each linear problem splits into a
// perfect matching of sponsored products onto reserved slots (mandatory, so
// negative edges are kept) and an optional matching of organic products onto
// organic slots (only profitable edges).

#ifndef ASSORTMENT_EXACT_SOLVER_H_
#define ASSORTMENT_EXACT_SOLVER_H_

#include <vector>

#include "assortment/model.h"

namespace assortment {

struct ParametricStep {
  double lambda = 0.0;
  double inner_value = 0.0;
  Placement placement;
};

struct DinkelbachTrace {
  std::vector<ParametricStep> iterations;
  bool converged = false;
};

struct ExactSolution {
  Placement placement;
  double revenue = 0.0;
  DinkelbachTrace trace;
};

struct ExactSolverOptions {
  // Termination threshold on the inner value F(lambda).
  double tolerance = kRevenueTolerance;
};

// Maximizes f over all placements that put every sponsored product in one of
// its valid slots (organic slots may stay empty). Ignores the organic
// constraint family. Throws kInfeasibleSponsoredAssignment when the sponsored
// products cannot all be placed, kConvergenceFailure if the iteration cap
// 10 * (|O| + |S|) * k is hit.
ExactSolution solve_exact(const Instance& inst,
                          const ExactSolverOptions& options = {});

// The same problem with the organic products removed.
ExactSolution solve_sponsored_only(const Instance& inst,
                                   const ExactSolverOptions& options = {});

// One linear subproblem: the placement maximizing
//   sum_{i shown} (r_i - lambda) w(i, t_i) - lambda w0
// and that maximum.
ParametricStep inner_parametric_step(const Instance& inst, double lambda);

}  // namespace assortment

#endif  // ASSORTMENT_EXACT_SOLVER_H_
