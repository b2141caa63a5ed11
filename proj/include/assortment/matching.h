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

// Weighted bipartite matching: min/max-weight perfect matching and
// max-weight partial matching over graphs whose missing edges are forbidden.
// Backed by a shortest-augmenting-path Hungarian method with potentials,
// O(n^3), whose column loops run through the kernels in kernels.h.

#ifndef ASSORTMENT_MATCHING_H_
#define ASSORTMENT_MATCHING_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace assortment {

class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t num_left, std::size_t num_right);

  std::size_t num_left() const { return num_left_; }
  std::size_t num_right() const { return num_right_; }

  // Throws kInvalidArgument on out-of-range nodes, duplicate edges, or a
  // non-finite weight.
  void add_edge(std::size_t left, std::size_t right, double weight);

  std::optional<double> weight(std::size_t left, std::size_t right) const;
  bool has_edge(std::size_t left, std::size_t right) const {
    return present_[left * num_right_ + right] != 0;
  }
  std::size_t num_edges() const { return num_edges_; }

  // Same edge set with every weight negated.
  BipartiteGraph negated() const;

 private:
  std::size_t num_left_;
  std::size_t num_right_;
  std::size_t num_edges_ = 0;
  std::vector<double> weights_;
  std::vector<unsigned char> present_;
};

struct MatchedPair {
  std::size_t left;
  std::size_t right;
  friend auto operator<=>(const MatchedPair&, const MatchedPair&) = default;
};

struct Matching {
  std::vector<MatchedPair> pairs;  // sorted by left node
  double total_weight = 0.0;       // summed in left-node order
};

// Perfect matching of minimum total weight. Requires num_left == num_right
// (kInvalidArgument otherwise); throws kNoPerfectMatching when the present
// edges admit no perfect matching.
Matching min_weight_perfect_matching(const BipartiteGraph& g);

// Perfect matching of maximum total weight; same contract as above.
Matching max_weight_perfect_matching(const BipartiteGraph& g);

// Maximum-weight matching, not necessarily perfect. Only strictly positive
// edges are ever used; the empty matching is returned when none exist.
Matching max_weight_matching(const BipartiteGraph& g);

enum class Objective { kMinimize, kMaximize };

// Optimal perfect matching on the first block (direction per `objective`)
// together with a max-weight partial matching on the second block.
std::pair<Matching, Matching> constrained_perfect_then_partial(
    const BipartiteGraph& perfect_block, const BipartiteGraph& partial_block,
    Objective objective);

// Dense square assignment: cost is row-major n x n, +inf marks forbidden
// cells. Returns the column assigned to each row, or std::nullopt if no
// finite-cost perfect assignment exists.
std::optional<std::vector<std::size_t>> solve_assignment(
    const std::vector<double>& cost, std::size_t n);

}  // namespace assortment

#endif  // ASSORTMENT_MATCHING_H_
