// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2 -mfma (see src/CMakeLists.txt); callers must go
// through avx2_backend(), which checks CPU support at runtime.

#include "pryce/kernels.hpp"

#if defined(PRYCE_HAVE_AVX2)
#include <immintrin.h>

#include <cmath>

namespace pryce::kernels {

namespace {

std::complex<double> weighted_dot_avx2(std::size_t n, const double* w, const double* a_re,
                                       const double* a_im, const double* b_re,
                                       const double* b_im) {
  __m256d sre = _mm256_setzero_pd();
  __m256d sim = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d wv = _mm256_loadu_pd(w + i);
    const __m256d ar = _mm256_loadu_pd(a_re + i);
    const __m256d ai = _mm256_loadu_pd(a_im + i);
    const __m256d br = _mm256_loadu_pd(b_re + i);
    const __m256d bi = _mm256_loadu_pd(b_im + i);
    const __m256d tre = _mm256_fmadd_pd(ai, bi, _mm256_mul_pd(ar, br));
    const __m256d tim = _mm256_fmsub_pd(ar, bi, _mm256_mul_pd(ai, br));
    sre = _mm256_fmadd_pd(wv, tre, sre);
    sim = _mm256_fmadd_pd(wv, tim, sim);
  }
  alignas(32) double lre[4], lim[4];
  _mm256_store_pd(lre, sre);
  _mm256_store_pd(lim, sim);
  double re = (lre[0] + lre[1]) + (lre[2] + lre[3]);
  double im = (lim[0] + lim[1]) + (lim[2] + lim[3]);
  for (; i < n; ++i) {
    const double ar = a_re[i], ai = a_im[i];
    const double br = b_re[i], bi = b_im[i];
    re += w[i] * (ar * br + ai * bi);
    im += w[i] * (ar * bi - ai * br);
  }
  return {re, im};
}

void energies_avx2(std::size_t n, double mass, const double* px, const double* py,
                   const double* pz, double* e) {
  const __m256d m2 = _mm256_set1_pd(mass * mass);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(px + i);
    const __m256d y = _mm256_loadu_pd(py + i);
    const __m256d z = _mm256_loadu_pd(pz + i);
    __m256d s = _mm256_fmadd_pd(x, x, m2);
    s = _mm256_fmadd_pd(y, y, s);
    s = _mm256_fmadd_pd(z, z, s);
    _mm256_storeu_pd(e + i, _mm256_sqrt_pd(s));
  }
  for (; i < n; ++i)
    e[i] = std::sqrt(mass * mass + px[i] * px[i] + py[i] * py[i] + pz[i] * pz[i]);
}

bool cpu_supported() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace

const Backend* avx2_backend() {
  static const Backend b{"avx2", &weighted_dot_avx2, &energies_avx2};
  static const bool ok = cpu_supported();
  return ok ? &b : nullptr;
}

}  // namespace pryce::kernels

#else

namespace pryce::kernels {
const Backend* avx2_backend() { return nullptr; }
}  // namespace pryce::kernels

#endif
