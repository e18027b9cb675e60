// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#include "pryce/spinors.hpp"

#include <cmath>

namespace pryce {

RestSpinors rest_spinors(const PolarizationBasis& b, const Vec3& p) {
  const Matrix2 xi = b.frame(p);
  const Matrix2 eta = conjugate_frame(xi);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  RestSpinors out;
  for (int s = 0; s < 2; ++s) {
    Spinor2 x, e;
    x[0] = xi(0, static_cast<std::size_t>(s));
    x[1] = xi(1, static_cast<std::size_t>(s));
    e[0] = eta(0, static_cast<std::size_t>(s));
    e[1] = eta(1, static_cast<std::size_t>(s));
    out.u_ring[static_cast<std::size_t>(s)] = cplx{inv_sqrt2} * stack(x, x);
    out.v_ring[static_cast<std::size_t>(s)] = cplx{inv_sqrt2} * stack(e, -e);
  }
  return out;
}

MomentumSpinors momentum_spinors(const PolarizationBasis& b, const OnShellMomentum& q) {
  const RestSpinors rest = rest_spinors(b, q.p);
  const Matrix4 boost = standard_boost(q);
  const double n = normalization(q);
  MomentumSpinors out{{MomentumSpinor{{}, Frequency::positive, 0, q},
                       MomentumSpinor{{}, Frequency::positive, 1, q}},
                      {MomentumSpinor{{}, Frequency::negative, 0, q},
                       MomentumSpinor{{}, Frequency::negative, 1, q}}};
  for (std::size_t s = 0; s < 2; ++s) {
    out.u[s].value = cplx{n} * (boost * rest.u_ring[s]);
    out.v[s].value = cplx{n} * (boost * rest.v_ring[s]);
  }
  return out;
}

Spinor4 mode_spinor_value(const MomentumSpinor& s, double t, const Vec3& x) {
  const double e = energy(s.momentum);
  const double phase_sign = s.frequency == Frequency::positive ? -1.0 : 1.0;
  const double arg = phase_sign * (e * t - s.momentum.p.dot(x));
  const cplx phase = std::polar(std::pow(2.0 * M_PI, -1.5), arg);
  return phase * s.value;
}

}  // namespace pryce
