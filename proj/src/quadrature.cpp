// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#include "pryce/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace pryce {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre: need n >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  // Newton iteration on P_n from the Chebyshev-like initial guess.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double wgt = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.weights[static_cast<std::size_t>(i)] = wgt;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = wgt;
  }
  return rule;
}

TensorGrid make_grid(const GridSpec& spec) {
  if (!(spec.half_width > 0.0)) throw std::domain_error("make_grid: half_width must be > 0");
  const auto rule = gauss_legendre(spec.points_per_axis);
  const std::size_t n = rule.nodes.size();
  TensorGrid g;
  g.px.reserve(n * n * n);
  g.py.reserve(n * n * n);
  g.pz.reserve(n * n * n);
  g.w.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        g.px.push_back(spec.center.x + spec.half_width * rule.nodes[i]);
        g.py.push_back(spec.center.y + spec.half_width * rule.nodes[j]);
        g.pz.push_back(spec.center.z + spec.half_width * rule.nodes[k]);
        g.w.push_back(spec.half_width * spec.half_width * spec.half_width *
                      rule.weights[i] * rule.weights[j] * rule.weights[k]);
      }
  return g;
}

}  // namespace pryce
