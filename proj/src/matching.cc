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

#include "assortment/matching.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "assortment/error.h"
#include "assortment/kernels.h"

namespace assortment {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Matching CollectPairs(const BipartiteGraph& g,
                      const std::vector<std::size_t>& col_of_row,
                      bool positive_only) {
  Matching m;
  for (std::size_t i = 0; i < col_of_row.size(); ++i) {
    const std::size_t j = col_of_row[i];
    if (i >= g.num_left() || j >= g.num_right() || !g.has_edge(i, j)) continue;
    const double w = *g.weight(i, j);
    if (positive_only && !(w > 0.0)) continue;
    m.pairs.push_back({i, j});
    m.total_weight += w;
  }
  return m;
}

Matching PerfectMatching(const BipartiteGraph& g, bool maximize) {
  if (g.num_left() != g.num_right()) {
    throw Error(ErrorCode::kInvalidArgument,
                "perfect matching needs equally sized sides (" +
                    std::to_string(g.num_left()) + " vs " +
                    std::to_string(g.num_right()) + ")");
  }
  const std::size_t n = g.num_left();
  std::vector<double> cost(n * n, kInf);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (auto w = g.weight(i, j)) cost[i * n + j] = maximize ? -*w : *w;
    }
  }
  auto assignment = solve_assignment(cost, n);
  if (!assignment) {
    throw Error(ErrorCode::kNoPerfectMatching,
                "no perfect matching exists on the allowed edges");
  }
  return CollectPairs(g, *assignment, /*positive_only=*/false);
}

}  // namespace

BipartiteGraph::BipartiteGraph(std::size_t num_left, std::size_t num_right)
    : num_left_(num_left),
      num_right_(num_right),
      weights_(num_left * num_right, 0.0),
      present_(num_left * num_right, 0) {}

void BipartiteGraph::add_edge(std::size_t left, std::size_t right,
                              double weight) {
  if (left >= num_left_ || right >= num_right_) {
    throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
  }
  if (!std::isfinite(weight)) {
    throw Error(ErrorCode::kInvalidArgument, "edge weight must be finite");
  }
  const std::size_t cell = left * num_right_ + right;
  if (present_[cell]) {
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate edge (" + std::to_string(left) + ", " +
                    std::to_string(right) + ")");
  }
  present_[cell] = 1;
  weights_[cell] = weight;
  ++num_edges_;
}

std::optional<double> BipartiteGraph::weight(std::size_t left,
                                             std::size_t right) const {
  const std::size_t cell = left * num_right_ + right;
  if (!present_[cell]) return std::nullopt;
  return weights_[cell];
}

BipartiteGraph BipartiteGraph::negated() const {
  BipartiteGraph out = *this;
  for (double& w : out.weights_) w = -w;
  return out;
}

std::optional<std::vector<std::size_t>> solve_assignment(
    const std::vector<double>& cost, std::size_t n) {
  if (n == 0) return std::vector<std::size_t>{};
  const kernels::AssignmentKernels& k = kernels::active();

  // Index 0 is the virtual root column of the shortest-path tree; real
  // columns are 1..n so the kernels see them as one contiguous block.
  std::vector<double> row_potential(n + 1, 0.0);
  std::vector<double> col_potential(n + 1, 0.0);
  std::vector<std::size_t> row_of_col(n + 1, 0);  // 0 = free column
  std::vector<std::int64_t> way(n + 1, 0);
  std::vector<double> min_slack(n + 1);
  std::vector<std::uint8_t> used(n + 1);

  for (std::size_t row = 1; row <= n; ++row) {
    row_of_col[0] = row;
    std::size_t col = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col] = 1;
      const std::size_t r = row_of_col[col];
      const kernels::RelaxResult step =
          k.relax(&cost[(r - 1) * n], row_potential[r], &col_potential[1],
                  &min_slack[1], &way[1], &used[1],
                  static_cast<std::int64_t>(col), n);
      if (!(step.delta < kInf)) return std::nullopt;
      const double delta = step.delta;
      // Column 0 is always in the tree.
      row_potential[row_of_col[0]] += delta;
      col_potential[0] -= delta;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) row_potential[row_of_col[j]] += delta;
      }
      k.shift(delta, &used[1], &col_potential[1], &min_slack[1], n);
      col = step.argmin + 1;
    } while (row_of_col[col] != 0);
    // Augment along the alternating path back to the root.
    do {
      const auto prev = static_cast<std::size_t>(way[col]);
      row_of_col[col] = row_of_col[prev];
      col = prev;
    } while (col != 0);
  }

  std::vector<std::size_t> col_of_row(n, 0);
  for (std::size_t j = 1; j <= n; ++j) col_of_row[row_of_col[j] - 1] = j - 1;
  return col_of_row;
}

Matching min_weight_perfect_matching(const BipartiteGraph& g) {
  return PerfectMatching(g, /*maximize=*/false);
}

Matching max_weight_perfect_matching(const BipartiteGraph& g) {
  return PerfectMatching(g, /*maximize=*/true);
}

Matching max_weight_matching(const BipartiteGraph& g) {
  // Pad to a square problem in which every cell is allowed: a pair that is
  // not a positive edge costs 0, which is the same as leaving both nodes
  // unmatched. The min-cost perfect assignment is then a max-weight matching.
  const std::size_t n = std::max(g.num_left(), g.num_right());
  if (n == 0) return {};
  std::vector<double> cost(n * n, 0.0);
  bool any_positive = false;
  for (std::size_t i = 0; i < g.num_left(); ++i) {
    for (std::size_t j = 0; j < g.num_right(); ++j) {
      if (auto w = g.weight(i, j); w && *w > 0.0) {
        cost[i * n + j] = -*w;
        any_positive = true;
      }
    }
  }
  if (!any_positive) return {};
  auto assignment = solve_assignment(cost, n);
  return CollectPairs(g, *assignment, /*positive_only=*/true);
}

std::pair<Matching, Matching> constrained_perfect_then_partial(
    const BipartiteGraph& perfect_block, const BipartiteGraph& partial_block,
    Objective objective) {
  Matching perfect = objective == Objective::kMinimize
                         ? min_weight_perfect_matching(perfect_block)
                         : max_weight_perfect_matching(perfect_block);
  return {std::move(perfect), max_weight_matching(partial_block)};
}

}  // namespace assortment
