// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#include "pryce/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace pryce::kernels {

const Backend& active_backend() {
  static const Backend& selected = []() -> const Backend& {
    const char* env = std::getenv("PRYCE_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return scalar_backend();
    if (const Backend* simd = avx2_backend()) {
      if (!env || std::strcmp(env, "avx2") == 0) return *simd;
    }
    return scalar_backend();
  }();
  return selected;
}

}  // namespace pryce::kernels
