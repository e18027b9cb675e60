// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#include "pryce/kinematics.hpp"

#include <cmath>
#include <stdexcept>

#include "pryce/algebra.hpp"

namespace pryce {

OnShellMomentum::OnShellMomentum(double m, Vec3 momentum) : mass(m), p(momentum) {
  if (!(m > 0.0) || !std::isfinite(m))
    throw std::domain_error("OnShellMomentum: mass must be positive and finite");
}

double energy(const OnShellMomentum& q) { return std::sqrt(q.mass * q.mass + q.p.norm2()); }

FourVector four_momentum(const OnShellMomentum& q) { return {energy(q), q.p}; }

double normalization(const OnShellMomentum& q) { return std::sqrt(q.mass / energy(q)); }

namespace {

Matrix4 boost_impl(const OnShellMomentum& q, double sign) {
  const double e = energy(q);
  const double denom = std::sqrt(2.0 * q.mass * (e + q.mass));
  Matrix4 m = (e + q.mass) * Matrix4::identity();
  for (int i = 0; i < 3; ++i) m += (sign * q.p[i]) * (gamma(0) * gamma(i + 1));
  return m * (1.0 / denom);
}

}  // namespace

Matrix4 standard_boost(const OnShellMomentum& q) { return boost_impl(q, +1.0); }

Matrix4 standard_boost_inverse(const OnShellMomentum& q) { return boost_impl(q, -1.0); }

Matrix2 standard_boost_upper(const OnShellMomentum& q) {
  const double e = energy(q);
  const double denom = std::sqrt(2.0 * q.mass * (e + q.mass));
  Matrix2 m = (e + q.mass) * Matrix2::identity();
  for (int i = 0; i < 3; ++i) m -= q.p[i] * pauli(i);
  return m * (1.0 / denom);
}

Matrix2 standard_boost_upper_inverse(const OnShellMomentum& q) {
  const double e = energy(q);
  const double denom = std::sqrt(2.0 * q.mass * (e + q.mass));
  Matrix2 m = (e + q.mass) * Matrix2::identity();
  for (int i = 0; i < 3; ++i) m += q.p[i] * pauli(i);
  return m * (1.0 / denom);
}

Matrix4 boost_squared(const OnShellMomentum& q, int sign) {
  if (sign != 1 && sign != -1) throw std::out_of_range("boost_squared: sign must be +-1");
  const double e = energy(q);
  Matrix4 m = e * Matrix4::identity();
  for (int i = 0; i < 3; ++i) m += (sign * q.p[i]) * (gamma(0) * gamma(i + 1));
  return m * (1.0 / q.mass);
}

LorentzMatrix lorentz_boost_matrix(const OnShellMomentum& q) {
  const double e = energy(q);
  LorentzMatrix L = LorentzMatrix::identity();
  L(0, 0) = e / q.mass;
  for (int i = 0; i < 3; ++i) {
    L(0, i + 1) = q.p[i] / q.mass;
    L(i + 1, 0) = q.p[i] / q.mass;
    for (int j = 0; j < 3; ++j)
      L(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + q.p[i] * q.p[j] / (q.mass * (e + q.mass));
  }
  return L;
}

}  // namespace pryce
