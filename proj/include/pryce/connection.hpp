// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>

#include "pryce/bases.hpp"
#include "pryce/kinematics.hpp"
#include "pryce/matrix.hpp"

namespace pryce {

/// Two-component momentum-space profile (alpha_{+1/2}, alpha_{-1/2})(p).
using ProfileFn = std::function<Spinor2(const Vec3&)>;

/// Pauli matrix elements in the xi-basis: Sigma_i = F(p)^+ sigma_i F(p),
/// where F is the basis frame. Hermitian; same algebra as the sigma_i.
std::array<Matrix2, 3> sigma_matrices(const PolarizationBasis& b, const Vec3& p);

/// Helicity-basis closed forms of Sigma_i; satisfy p^i Sigma_i = |p| sigma_3.
std::array<Matrix2, 3> sigma_matrices_helicity_closed(const Vec3& p);

/// Connection matrices Omega_i = F^+ (d F / d p^i), by central differences of
/// the frame with step 1e-5 |p| (the frame varies on the scale |p|).
/// i*Omega_i is hermitian up to finite-difference error.
std::array<Matrix2, 3> omega_matrices(const PolarizationBasis& b, const Vec3& p);

/// Helicity-basis closed forms of Omega_i; satisfy p^i Omega_i = 0.
std::array<Matrix2, 3> omega_matrices_helicity_closed(const Vec3& p);

/// Covariant derivative of a profile: (d/dp^i) f + Omega_i f, the profile
/// derivative by central differences with step 1e-4 max(|p|, fd_scale).
Spinor2 covariant_derivative(const PolarizationBasis& b, const ProfileFn& f, int axis,
                             const Vec3& p, double fd_scale = 1.0);

/// Wigner little-group matrix D(lambda, p) = F(p)^+ l_p^{-1} lambda_hat
/// l_{p'} F(p'), with p' the spatial part of Lambda(lambda)^{-1} (E,p).
/// Unitary with unit determinant for SU(2)-frame bases.
struct WignerMatrix {
  Matrix2 d;
  Matrix4 lambda;
  Vec3 p;
  Vec3 p_prime;
};

WignerMatrix wigner_matrix(const Matrix4& lambda, const PolarizationBasis& b,
                           const OnShellMomentum& q);

/// Matrix part of the boost generator:
/// k_i(p) = eps_{ijk} p^j Sigma_k(p) / (2(E+m)).
std::array<Matrix2, 3> boost_generator_matrix_part(const OnShellMomentum& q,
                                                   const PolarizationBasis& b);

/// One-particle generators at fixed momentum: multiplicative parts as 2x2
/// matrices, derivative-bearing generators as closures over profiles.
/// The boost closure is the symmetrized self-adjoint form
/// K_i = i E d~_i + i p^i/(2E) + k_i (the i p^i/2E measure term keeps
/// i E d/dp self-adjoint on L^2(d^3p)).
struct GeneratorTable {
  double energy = 0.0;                   // H
  Vec3 momentum;                         // P^i
  Matrix2 polarization;                  // W = sigma_3/2
  Matrix2 helicity;                      // W_0 = (|p|/2) sigma_3
  std::array<Matrix2, 3> spin;           // S_i = Sigma_i/2
  std::array<Matrix2, 3> boost_matrix;   // k_i
  std::array<std::function<Spinor2(const ProfileFn&)>, 3> orbital;  // L_i
  std::array<std::function<Spinor2(const ProfileFn&)>, 3> boost;    // K_i
};

/// Requires the helicity basis (the closed multiplicative parts are derived
/// there); throws std::domain_error otherwise.
GeneratorTable rqm_generator_table(const OnShellMomentum& q, const PolarizationBasis& b);

}  // namespace pryce
