// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pryce/matrix.hpp"
#include "pryce/vec.hpp"

namespace pryce {

/// Spatial momentum carried together with the particle mass, so the energy
/// E(p) = sqrt(m^2 + p^2) is always computed consistently. Natural units
/// (hbar = c = 1); m > 0 is enforced at construction.
struct OnShellMomentum {
  double mass;
  Vec3 p;

  OnShellMomentum(double m, Vec3 momentum);

  OnShellMomentum with_momentum(Vec3 momentum) const { return {mass, momentum}; }
  OnShellMomentum reflected() const { return {mass, -p}; }
};

double energy(const OnShellMomentum& q);

/// Four-momentum (E(p), p).
FourVector four_momentum(const OnShellMomentum& q);

/// N(p) = sqrt(m/E), the mode-spinor normalization factor; N(0) = 1.
double normalization(const OnShellMomentum& q);

/// Standard boost l_p = (E + m + gamma^0 gamma^i p^i) / sqrt(2m(E+m)),
/// hermitian, with l_p^{-1} = l_{-p} = gamma^0 l_p gamma^0.
Matrix4 standard_boost(const OnShellMomentum& q);

/// l_p^{-1}, computed from the closed form rather than by matrix inversion.
Matrix4 standard_boost_inverse(const OnShellMomentum& q);

/// Upper-left 2x2 block of l_p, i.e. the SL(2,C) hat element
/// (E + m - sigma.p) / sqrt(2m(E+m)).
Matrix2 standard_boost_upper(const OnShellMomentum& q);

Matrix2 standard_boost_upper_inverse(const OnShellMomentum& q);

/// l_{sign p}^2 = (E + sign gamma^0 gamma^i p^i)/m; sign is +1 or -1.
Matrix4 boost_squared(const OnShellMomentum& q, int sign);

/// The SO(1,3) boost L_p with L^0_0 = E/m, L^0_i = L^i_0 = p^i/m,
/// L^i_j = delta_ij + p^i p^j / (m(E+m)); satisfies L_p (m,0,0,0) = (E,p).
LorentzMatrix lorentz_boost_matrix(const OnShellMomentum& q);

}  // namespace pryce
