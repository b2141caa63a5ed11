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

// Column kernels of the shortest-augmenting-path assignment solver.
//
// Each Hungarian phase repeatedly scans all columns of one cost row
// ("relax") and then shifts the dual variables ("shift"). Both loops are
// element-wise over contiguous double arrays, so they come in a scalar
// reference version and an AVX2 version. The variants are required to be
// bit-identical: they perform the same IEEE operations per column and break
// argmin ties toward the lowest column index.
//
// Forbidden cells carry +infinity in the cost row. They never win a strict
// comparison, and a relax result of +infinity signals that no augmenting path
// exists.

#ifndef ASSORTMENT_KERNELS_H_
#define ASSORTMENT_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace assortment::kernels {

struct RelaxResult {
  double delta;        // min over unused columns of min_slack
  std::size_t argmin;  // first column attaining it; n when delta is +inf
};

// For every column j with used[j] == 0:
//   reduced = (row[j] - row_potential) - col_potential[j]
//   if reduced < min_slack[j]: min_slack[j] = reduced, way[j] = from_column
// then returns the minimum of min_slack over unused columns.
using RelaxFn = RelaxResult (*)(const double* row, double row_potential,
                                const double* col_potential, double* min_slack,
                                std::int64_t* way, const std::uint8_t* used,
                                std::int64_t from_column, std::size_t n);

// For every column j: used[j] ? col_potential[j] -= delta
//                             : min_slack[j] -= delta.
using ShiftFn = void (*)(double delta, const std::uint8_t* used,
                         double* col_potential, double* min_slack,
                         std::size_t n);

struct AssignmentKernels {
  RelaxFn relax;
  ShiftFn shift;
};

enum class Backend { kScalar, kAvx2 };

std::string_view BackendName(Backend backend);

// Compiled in and supported by the running CPU.
bool backend_available(Backend backend);

// Kernels for one backend; falls back to scalar when unavailable.
const AssignmentKernels& kernels_for(Backend backend);

// The process-wide selection. Defaults to the widest available backend; the
// environment variable ASSORTMENT_KERNELS=scalar forces the reference path.
Backend active_backend();
const AssignmentKernels& active();

// Overrides the selection (tests and benchmarks). Returns false, leaving the
// selection unchanged, if the backend is unavailable.
bool set_backend(Backend backend);

namespace scalar {
RelaxResult relax(const double* row, double row_potential,
                  const double* col_potential, double* min_slack,
                  std::int64_t* way, const std::uint8_t* used,
                  std::int64_t from_column, std::size_t n);
void shift(double delta, const std::uint8_t* used, double* col_potential,
           double* min_slack, std::size_t n);
}  // namespace scalar

#if defined(ASSORTMENT_HAVE_AVX2)
namespace avx2 {
RelaxResult relax(const double* row, double row_potential,
                  const double* col_potential, double* min_slack,
                  std::int64_t* way, const std::uint8_t* used,
                  std::int64_t from_column, std::size_t n);
void shift(double delta, const std::uint8_t* used, double* col_potential,
           double* min_slack, std::size_t n);
}  // namespace avx2
#endif

}  // namespace assortment::kernels

#endif  // ASSORTMENT_KERNELS_H_
