// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "pryce/vec.hpp"

namespace pryce {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

/// Cubic tensor-product grid specification around a packet center.
struct GridSpec {
  Vec3 center;
  double half_width = 0.0;
  int points_per_axis = 32;
};

/// Flattened tensor-product Gauss-Legendre grid, stored structure-of-arrays
/// so the reduction kernels can stream it.
struct TensorGrid {
  std::vector<double> px, py, pz;  // node coordinates
  std::vector<double> w;           // tensor weights

  std::size_t size() const { return w.size(); }
  Vec3 point(std::size_t i) const { return {px[i], py[i], pz[i]}; }
};

TensorGrid make_grid(const GridSpec& spec);

}  // namespace pryce
