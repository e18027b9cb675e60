// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace pryce::kernels {

// The quadrature inner loops (weighted complex reductions over grid arrays
// and batch on-shell energies) are the only data-parallel hot paths in the
// library. They come in a scalar reference implementation and an AVX2+FMA
// variant selected once at startup; the two are equivalence-tested.

/// sum_i w[i] * conj(a[i]) * b[i], split-complex (structure-of-arrays).
using WeightedDotFn = std::complex<double> (*)(std::size_t n, const double* w,
                                               const double* a_re, const double* a_im,
                                               const double* b_re, const double* b_im);

/// e[i] = sqrt(mass^2 + px^2 + py^2 + pz^2)
using EnergiesFn = void (*)(std::size_t n, double mass, const double* px, const double* py,
                            const double* pz, double* e);

struct Backend {
  const char* name;
  WeightedDotFn weighted_dot;
  EnergiesFn energies;
};

/// Scalar reference kernels; always available.
const Backend& scalar_backend();

/// AVX2+FMA kernels, or nullptr when unsupported (at build or run time).
const Backend* avx2_backend();

/// The selected backend: AVX2 when the CPU supports it, unless the
/// environment variable PRYCE_KERNELS=scalar forces the reference path.
const Backend& active_backend();

inline std::complex<double> weighted_dot(std::size_t n, const double* w, const double* a_re,
                                         const double* a_im, const double* b_re,
                                         const double* b_im) {
  return active_backend().weighted_dot(n, w, a_re, a_im, b_re, b_im);
}

inline void energies(std::size_t n, double mass, const double* px, const double* py,
                     const double* pz, double* e) {
  active_backend().energies(n, mass, px, py, pz, e);
}

}  // namespace pryce::kernels
