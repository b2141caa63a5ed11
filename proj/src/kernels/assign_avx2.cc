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

// AVX2 variants of the assignment column kernels. This file is the only one
// compiled with -mavx2; it is reached solely through the runtime dispatcher.

#include <immintrin.h>

#include <cstring>
#include <limits>

#include "assortment/kernels.h"

namespace assortment::kernels::avx2 {
namespace {

// All-ones lanes where used[j..j+3] == 0.
inline __m256d UnusedMask(const std::uint8_t* used) {
  std::int32_t packed;
  std::memcpy(&packed, used, sizeof(packed));
  const __m256i flags = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(packed));
  return _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(flags, _mm256_setzero_si256()));
}

inline double HorizontalMin(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_min_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_min_sd(m, _mm_unpackhi_pd(m, m)));
}

}  // namespace

RelaxResult relax(const double* row, double row_potential,
                  const double* col_potential, double* min_slack,
                  std::int64_t* way, const std::uint8_t* used,
                  std::int64_t from_column, std::size_t n) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const __m256d potential = _mm256_set1_pd(row_potential);
  const __m256i from = _mm256_set1_epi64x(from_column);
  const __m256d inf = _mm256_set1_pd(kInf);
  __m256d running_min = inf;

  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d unused = UnusedMask(used + j);
    const __m256d reduced =
        _mm256_sub_pd(_mm256_sub_pd(_mm256_loadu_pd(row + j), potential),
                      _mm256_loadu_pd(col_potential + j));
    const __m256d slack = _mm256_loadu_pd(min_slack + j);
    const __m256d improve =
        _mm256_and_pd(_mm256_cmp_pd(reduced, slack, _CMP_LT_OQ), unused);
    const __m256d updated = _mm256_blendv_pd(slack, reduced, improve);
    _mm256_storeu_pd(min_slack + j, updated);

    auto* way_ptr = reinterpret_cast<__m256i*>(way + j);
    const __m256i old_way = _mm256_loadu_si256(way_ptr);
    _mm256_storeu_si256(
        way_ptr,
        _mm256_blendv_epi8(old_way, from, _mm256_castpd_si256(improve)));

    running_min =
        _mm256_min_pd(running_min, _mm256_blendv_pd(inf, updated, unused));
  }

  double delta = HorizontalMin(running_min);
  for (; j < n; ++j) {
    if (used[j]) continue;
    const double reduced = (row[j] - row_potential) - col_potential[j];
    if (reduced < min_slack[j]) {
      min_slack[j] = reduced;
      way[j] = from_column;
    }
    if (min_slack[j] < delta) delta = min_slack[j];
  }

  if (!(delta < kInf)) return {kInf, n};
  // The scalar kernel keeps the first column attaining the minimum; report
  // that column and its exact stored value.
  for (std::size_t c = 0; c < n; ++c) {
    if (!used[c] && min_slack[c] == delta) return {min_slack[c], c};
  }
  return {kInf, n};
}

void shift(double delta, const std::uint8_t* used, double* col_potential,
           double* min_slack, std::size_t n) {
  const __m256d d = _mm256_set1_pd(delta);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d unused = UnusedMask(used + j);
    const __m256d v = _mm256_loadu_pd(col_potential + j);
    const __m256d s = _mm256_loadu_pd(min_slack + j);
    _mm256_storeu_pd(col_potential + j,
                     _mm256_blendv_pd(_mm256_sub_pd(v, d), v, unused));
    _mm256_storeu_pd(min_slack + j,
                     _mm256_blendv_pd(s, _mm256_sub_pd(s, d), unused));
  }
  for (; j < n; ++j) {
    if (used[j]) {
      col_potential[j] -= delta;
    } else {
      min_slack[j] -= delta;
    }
  }
}

}  // namespace assortment::kernels::avx2
