// Copyright 2026 The qpc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string_view>

#include "qpc/kernels.hpp"

namespace qpc::kernels {

bool avx2_available() noexcept {
#if defined(QPC_HAVE_AVX2)
  static const bool ok = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return ok;
#else
  return false;
#endif
}

const KernelTable& active() noexcept {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* pin = std::getenv("QPC_SIMD");
    if (pin != nullptr && std::string_view(pin) == "scalar") return scalar::table();
#if defined(QPC_HAVE_AVX2)
    if (avx2_available()) return avx2::table();
#endif
    return scalar::table();
  }();
  return chosen;
}

}  // namespace qpc::kernels
