// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#include "pryce/algebra.hpp"

#include <stdexcept>

namespace pryce {

namespace {

constexpr cplx kI{0.0, 1.0};

Matrix2 make_pauli(int axis) {
  Matrix2 m;
  switch (axis) {
    case 0:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 1:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case 2:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw std::out_of_range("pauli: axis must be 0..2");
  }
  return m;
}

Matrix4 make_gamma(int mu) {
  const Matrix2 z;
  const Matrix2 one = Matrix2::identity();
  if (mu == 0) return from_blocks(z, one, one, z);
  const Matrix2 s = make_pauli(mu - 1);
  return from_blocks(z, s, -s, z);
}

}  // namespace

const Matrix2& pauli(int axis) {
  static const Matrix2 s[3] = {make_pauli(0), make_pauli(1), make_pauli(2)};
  if (axis < 0 || axis > 2) throw std::out_of_range("pauli: axis must be 0..2");
  return s[axis];
}

const Matrix4& gamma(int mu) {
  static const Matrix4 g[4] = {make_gamma(0), make_gamma(1), make_gamma(2), make_gamma(3)};
  if (mu < 0 || mu > 3) throw std::out_of_range("gamma: index must be 0..3");
  return g[mu];
}

const Matrix4& gamma5() {
  static const Matrix4 g5 = kI * (gamma(0) * gamma(1) * gamma(2) * gamma(3));
  return g5;
}

const Matrix4& charge_conjugation() {
  static const Matrix4 c = kI * gamma(2);
  return c;
}

Matrix4 spin_generator(int mu, int nu) {
  return (0.25 * kI) * commutator(gamma(mu), gamma(nu));
}

Matrix4 spin_generator_lower(int mu, int nu) {
  return metric(mu, mu) * metric(nu, nu) * spin_generator(mu, nu);
}

const Matrix4& spin_rotation_generator(int axis) {
  static const Matrix4 s[3] = {spin_generator(2, 3), spin_generator(3, 1), spin_generator(1, 2)};
  if (axis < 0 || axis > 2) throw std::out_of_range("spin_rotation_generator: axis must be 0..2");
  return s[axis];
}

Matrix4 spin_dot(const Vec3& v) {
  Matrix4 m;
  for (int i = 0; i < 3; ++i) m += v[i] * spin_rotation_generator(i);
  return m;
}

std::pair<Matrix2, Matrix4> rotation(const Vec3& theta) {
  Matrix2 arg;
  for (int i = 0; i < 3; ++i) arg += (-0.5 * kI * theta[i]) * pauli(i);
  const Matrix2 r2 = expm(arg);
  return {r2, from_blocks(r2, Matrix2{}, Matrix2{}, r2)};
}

std::pair<Matrix2, Matrix4> lorentz_boost_sl2(const Vec3& tau) {
  Matrix2 arg;
  for (int i = 0; i < 3; ++i) arg += (0.5 * tau[i]) * pauli(i);
  const Matrix2 l2 = expm(arg);
  return {l2, from_blocks(l2, Matrix2{}, Matrix2{}, l2.inverse())};
}

LorentzMatrix lorentz_from_sl2(const Matrix4& lambda, double reality_tol) {
  const Matrix4 lam_inv = lambda.inverse();
  LorentzMatrix out;
  for (int mu = 0; mu < 4; ++mu) {
    const Matrix4 m = lam_inv * gamma(mu) * lambda;
    for (int nu = 0; nu < 4; ++nu) {
      const cplx lam_mu_nu = 0.25 * (m * gamma(nu)).trace() * metric(nu, nu);
      if (std::abs(lam_mu_nu.imag()) > reality_tol)
        throw std::domain_error("lorentz_from_sl2: non-real Lorentz matrix; input not in rho_D");
      out(mu, nu) = lam_mu_nu.real();
    }
  }
  return out;
}

}  // namespace pryce
