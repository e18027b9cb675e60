// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "pryce/bases.hpp"
#include "pryce/kinematics.hpp"
#include "pryce/matrix.hpp"

namespace pryce {

/// Rest-frame spinors built from a polarization basis at momentum p:
/// u_ring_sigma = (xi_sigma; xi_sigma)/sqrt(2)  (gamma^0 eigenvalue +1),
/// v_ring_sigma = (eta_sigma; -eta_sigma)/sqrt(2) (gamma^0 eigenvalue -1).
struct RestSpinors {
  std::array<Spinor4, 2> u_ring;
  std::array<Spinor4, 2> v_ring;
};

RestSpinors rest_spinors(const PolarizationBasis& b, const Vec3& p);

enum class Frequency { positive, negative };

/// Wigner spinor u_sigma(p) = N(p) l_p u_ring_sigma(p) (positive frequency)
/// or v_sigma(p) = N(p) l_p v_ring_sigma(p) (negative frequency).
struct MomentumSpinor {
  Spinor4 value;
  Frequency frequency;
  int sigma_index;  // 0: sigma=+1/2, 1: sigma=-1/2
  OnShellMomentum momentum;

  double sigma() const { return sigma_index == 0 ? 0.5 : -0.5; }
};

struct MomentumSpinors {
  std::array<MomentumSpinor, 2> u;
  std::array<MomentumSpinor, 2> v;
};

MomentumSpinors momentum_spinors(const PolarizationBasis& b, const OnShellMomentum& q);

/// Plane-wave mode spinor at a spacetime point, with the (2pi)^{-3/2} factor:
/// positive frequency carries exp(-iEt + ip.x), negative exp(+iEt - ip.x).
Spinor4 mode_spinor_value(const MomentumSpinor& s, double t, const Vec3& x);

}  // namespace pryce
