// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "pryce/kernels.hpp"

namespace pryce::kernels {

namespace {

std::complex<double> weighted_dot_scalar(std::size_t n, const double* w, const double* a_re,
                                         const double* a_im, const double* b_re,
                                         const double* b_im) {
  // Four independent accumulators; matches the AVX2 lane layout closely
  // enough that the equivalence tolerance stays tight.
  double re[4] = {0, 0, 0, 0};
  double im[4] = {0, 0, 0, 0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (std::size_t l = 0; l < 4; ++l) {
      const double ar = a_re[i + l], ai = a_im[i + l];
      const double br = b_re[i + l], bi = b_im[i + l];
      re[l] += w[i + l] * (ar * br + ai * bi);
      im[l] += w[i + l] * (ar * bi - ai * br);
    }
  }
  double sre = (re[0] + re[1]) + (re[2] + re[3]);
  double sim = (im[0] + im[1]) + (im[2] + im[3]);
  for (; i < n; ++i) {
    const double ar = a_re[i], ai = a_im[i];
    const double br = b_re[i], bi = b_im[i];
    sre += w[i] * (ar * br + ai * bi);
    sim += w[i] * (ar * bi - ai * br);
  }
  return {sre, sim};
}

void energies_scalar(std::size_t n, double mass, const double* px, const double* py,
                     const double* pz, double* e) {
  const double m2 = mass * mass;
  for (std::size_t i = 0; i < n; ++i)
    e[i] = std::sqrt(m2 + px[i] * px[i] + py[i] * py[i] + pz[i] * pz[i]);
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend b{"scalar", &weighted_dot_scalar, &energies_scalar};
  return b;
}

}  // namespace pryce::kernels
