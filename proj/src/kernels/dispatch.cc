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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "assortment/kernels.h"

namespace assortment::kernels {
namespace {

constexpr AssignmentKernels kScalarKernels{&scalar::relax, &scalar::shift};
#if defined(ASSORTMENT_HAVE_AVX2)
constexpr AssignmentKernels kAvx2Kernels{&avx2::relax, &avx2::shift};
#endif

bool CpuHasAvx2() {
#if defined(ASSORTMENT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend DefaultBackend() {
  if (const char* env = std::getenv("ASSORTMENT_KERNELS")) {
    if (std::string_view(env) == "scalar") return Backend::kScalar;
  }
  return CpuHasAvx2() ? Backend::kAvx2 : Backend::kScalar;
}

std::atomic<Backend>& Selection() {
  static std::atomic<Backend> selection{DefaultBackend()};
  return selection;
}

}  // namespace

std::string_view BackendName(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
      return CpuHasAvx2();
  }
  return false;
}

const AssignmentKernels& kernels_for(Backend backend) {
#if defined(ASSORTMENT_HAVE_AVX2)
  if (backend == Backend::kAvx2 && CpuHasAvx2()) return kAvx2Kernels;
#else
  (void)backend;
#endif
  return kScalarKernels;
}

Backend active_backend() { return Selection().load(std::memory_order_relaxed); }

const AssignmentKernels& active() { return kernels_for(active_backend()); }

bool set_backend(Backend backend) {
  if (!backend_available(backend)) return false;
  Selection().store(backend, std::memory_order_relaxed);
  return true;
}

}  // namespace assortment::kernels
