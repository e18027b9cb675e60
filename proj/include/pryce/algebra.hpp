// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "pryce/matrix.hpp"
#include "pryce/vec.hpp"

namespace pryce {

// Chiral representation throughout: gamma^0 = offdiag(1,1),
// gamma^k = [[0, sigma_k], [-sigma_k, 0]], so that gamma^5 = diag(-1,-1,1,1)
// and (1+gamma^0)/2 projects onto spinors with equal upper/lower Pauli blocks.

/// sigma_1..sigma_3; axis is 0-based.
const Matrix2& pauli(int axis);

/// gamma^mu, mu in 0..3; throws std::out_of_range otherwise.
const Matrix4& gamma(int mu);

/// gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3 (diagonal here).
const Matrix4& gamma5();

/// Charge conjugation C = C^{-1} = i gamma^2.
const Matrix4& charge_conjugation();

/// s^{mu nu} = (i/4)[gamma^mu, gamma^nu] (upper indices).
Matrix4 spin_generator(int mu, int nu);

/// Lowered-index s_{mu nu} = eta_{mu a} eta_{nu b} s^{ab}.
Matrix4 spin_generator_lower(int mu, int nu);

/// Rotation generator s_i = (1/2) eps_{ijk} s^{jk} = diag(sigma_i/2, sigma_i/2).
const Matrix4& spin_rotation_generator(int axis);

/// s . v contracted over the three rotation generators.
Matrix4 spin_dot(const Vec3& v);

/// Rotation by Cayley-Klein parameters: r_hat = exp(-i theta.sigma/2),
/// r = diag(r_hat, r_hat).
std::pair<Matrix2, Matrix4> rotation(const Vec3& theta);

/// Boost by rapidity parameters: l_hat = exp(+tau.sigma/2),
/// l = diag(l_hat, l_hat^{-1}).
std::pair<Matrix2, Matrix4> lorentz_boost_sl2(const Vec3& tau);

/// Lorentz matrix of a rho_D element via lambda^{-1} gamma^mu lambda
/// = Lambda^mu_nu gamma^nu, extracted with trace orthogonality.
/// Throws std::domain_error if lambda is singular or the result is not real
/// within `reality_tol` (input outside rho_D).
LorentzMatrix lorentz_from_sl2(const Matrix4& lambda, double reality_tol = 1e-10);

}  // namespace pryce
