// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>

#include "pryce/bases.hpp"
#include "pryce/kinematics.hpp"
#include "pryce/matrix.hpp"

namespace pryce {

// Momentum-space (Fourier transform) forms of the integral operators of the
// one-particle theory. All functions are pure; matrices act on Dirac space.

/// Named momentum -> Matrix4 map, for passing operators around as values.
struct OperatorKernel {
  std::string name;
  std::function<Matrix4(const OnShellMomentum&)> eval;
};

/// H_D(p) = m gamma^0 + gamma^0 gamma^i p^i = E (Pi_+ - Pi_-).
Matrix4 hamiltonian(const OnShellMomentum& q);

/// Frequency projectors Pi_+/- = (1 +- H_D/E)/2; also equal to the
/// boost-sandwich forms (m/E) l_{+-p} (1 +- gamma^0)/2 l_{+-p}.
std::pair<Matrix4, Matrix4> projectors(const OnShellMomentum& q);

/// Pryce/Foldy-Wouthuysen spin component, closed form
/// (m/E) s_i + p^i (s.p) / (E(E+m)) + (i/2E) eps_{ijk} p^j gamma^k.
/// Always cross-checked against the boost-sandwich form; throws
/// std::logic_error on internal mismatch.
Matrix4 pryce_spin(const OnShellMomentum& q, int axis);

/// Boost-sandwich form s_i(p) Pi_+ + s_i(-p) Pi_- with s_i(p) = l_p s_i l_p^{-1}.
Matrix4 pryce_spin_sandwich(const OnShellMomentum& q, int axis);

/// FW-conjugated form U_FW(-p) s_i U_FW(p).
Matrix4 pryce_spin_fw(const OnShellMomentum& q, int axis);

/// U_FW(p) = (E + m + gamma^i p^i) / sqrt(2E(E+m)); unitary,
/// U_FW(p) H_D(p) U_FW(-p) = gamma^0 E.
Matrix4 fw_transform(const OnShellMomentum& q);

/// Polarization operator W(p) = w(p) Pi_+ + w(-p) Pi_- with
/// w(p) = l_p (s.n(p)) l_p^{-1}; requires a basis direction n(p).
Matrix4 polarization(const OnShellMomentum& q, const PolarizationBasis& b);

/// Helicity operator W_0(p) = s_i p^i.
Matrix4 helicity_operator(const OnShellMomentum& q);

/// Pryce coordinate correction, closed form
/// i gamma^i/(2E) + eps_{ijk} p^j s_k/(E(E+m)) - i p^i gamma.p/(2E^2(E+m)).
Matrix4 coordinate_correction(const OnShellMomentum& q, int axis);

/// Projector/derivative construction of the same operator: central finite
/// differences of p -> N(p) l_{+-p} weighted by the frequency projectors.
Matrix4 coordinate_correction_fd(const OnShellMomentum& q, int axis, double step = 1e-6);

/// 2x2 restriction of the Pauli-Lubanski components in the helicity basis:
/// W_0 = (|p|/2) sigma_3 and W_i = m Sigma_i/2 + p^i/(E+m) W_0. The orbital
/// parts of E J_i + eps_{ijk} p^j K_k cancel; only matrix parts appear.
struct PauliLubanskiRestricted {
  Matrix2 w0;
  std::array<Matrix2, 3> w;

  /// -eta^{mu nu} W_mu W_nu = sum_i W_i^2 - W_0^2; equals (3/4) m^2.
  Matrix2 casimir() const;
};

PauliLubanskiRestricted pauli_lubanski_restricted(const OnShellMomentum& q,
                                                  const PolarizationBasis& b);

}  // namespace pryce
