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

#include <limits>

#include "assortment/kernels.h"

namespace assortment::kernels::scalar {

RelaxResult relax(const double* row, double row_potential,
                  const double* col_potential, double* min_slack,
                  std::int64_t* way, const std::uint8_t* used,
                  std::int64_t from_column, std::size_t n) {
  RelaxResult best{std::numeric_limits<double>::infinity(), n};
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) continue;
    const double reduced = (row[j] - row_potential) - col_potential[j];
    if (reduced < min_slack[j]) {
      min_slack[j] = reduced;
      way[j] = from_column;
    }
    if (min_slack[j] < best.delta) {
      best.delta = min_slack[j];
      best.argmin = j;
    }
  }
  return best;
}

void shift(double delta, const std::uint8_t* used, double* col_potential,
           double* min_slack, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) {
      col_potential[j] -= delta;
    } else {
      min_slack[j] -= delta;
    }
  }
}

}  // namespace assortment::kernels::scalar
