// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#include "pryce/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "pryce/algebra.hpp"
#include "pryce/connection.hpp"

namespace pryce {

namespace {

constexpr cplx kI{0.0, 1.0};

void check_axis(int axis) {
  if (axis < 0 || axis > 2) throw std::out_of_range("operator axis must be 0..2");
}

}  // namespace

Matrix4 hamiltonian(const OnShellMomentum& q) {
  Matrix4 h = q.mass * gamma(0);
  for (int i = 0; i < 3; ++i) h += q.p[i] * (gamma(0) * gamma(i + 1));
  return h;
}

std::pair<Matrix4, Matrix4> projectors(const OnShellMomentum& q) {
  const Matrix4 h = (1.0 / energy(q)) * hamiltonian(q);
  const Matrix4 one = Matrix4::identity();
  return {0.5 * (one + h), 0.5 * (one - h)};
}

Matrix4 pryce_spin_sandwich(const OnShellMomentum& q, int axis) {
  check_axis(axis);
  const Matrix4 l = standard_boost(q);
  const Matrix4 li = standard_boost_inverse(q);
  const Matrix4& s = spin_rotation_generator(axis);
  const Matrix4 half = 0.5 * Matrix4::identity();
  const Matrix4 proj_up = half + 0.5 * gamma(0);
  const Matrix4 proj_dn = half - 0.5 * gamma(0);
  return (q.mass / energy(q)) * (l * s * proj_up * l + li * s * proj_dn * li);
}

Matrix4 pryce_spin_fw(const OnShellMomentum& q, int axis) {
  check_axis(axis);
  return fw_transform(q.reflected()) * spin_rotation_generator(axis) * fw_transform(q);
}

Matrix4 pryce_spin(const OnShellMomentum& q, int axis) {
  check_axis(axis);
  const double e = energy(q);
  const double m = q.mass;
  Matrix4 out = (m / e) * spin_rotation_generator(axis);
  const Matrix4 sp = spin_dot(q.p);
  out += (q.p[axis] / (e * (e + m))) * sp;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      const int eps = levi_civita(axis, j, k);
      if (eps) out += (kI * (0.5 / e) * static_cast<double>(eps) * q.p[j]) * gamma(k + 1);
    }
  // the sandwich form is the defining one; disagreement means a bug
  const double scale = std::max(1.0, e / m);
  if (max_abs_diff(out, pryce_spin_sandwich(q, axis)) > 1e-12 * scale)
    throw std::logic_error("pryce_spin: closed form disagrees with sandwich form");
  return out;
}

Matrix4 fw_transform(const OnShellMomentum& q) {
  const double e = energy(q);
  Matrix4 u = (e + q.mass) * Matrix4::identity();
  for (int i = 0; i < 3; ++i) u += q.p[i] * gamma(i + 1);
  return u * (1.0 / std::sqrt(2.0 * e * (e + q.mass)));
}

Matrix4 polarization(const OnShellMomentum& q, const PolarizationBasis& b) {
  if (!b.has_direction())
    throw std::domain_error("polarization: basis supplies no direction n(p)");
  const auto [pi_plus, pi_minus] = projectors(q);
  const auto w_at = [&](const OnShellMomentum& qq) {
    const Matrix4 l = standard_boost(qq);
    return l * spin_dot(b.direction(qq.p)) * standard_boost_inverse(qq);
  };
  return w_at(q) * pi_plus + w_at(q.reflected()) * pi_minus;
}

Matrix4 helicity_operator(const OnShellMomentum& q) { return spin_dot(q.p); }

Matrix4 coordinate_correction(const OnShellMomentum& q, int axis) {
  check_axis(axis);
  const double e = energy(q);
  const double m = q.mass;
  Matrix4 out = (kI * (0.5 / e)) * gamma(axis + 1);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      const int eps = levi_civita(axis, j, k);
      if (eps) out += (static_cast<double>(eps) * q.p[j] / (e * (e + m))) * spin_rotation_generator(k);
    }
  Matrix4 gp;
  for (int j = 0; j < 3; ++j) gp += q.p[j] * gamma(j + 1);
  out += (-kI * (0.5 * q.p[axis] / (e * e * (e + m)))) * gp;
  return out;
}

Matrix4 coordinate_correction_fd(const OnShellMomentum& q, int axis, double step) {
  check_axis(axis);
  // dx^i(p)    = -i N^{-1} d_i(N l_p)    l_p^{-1}
  // dx^i(-p)   = -i N^{-1} d_i(N l_{-p}) l_{-p}^{-1}
  // with the momentum reflection applied inside the boost before the
  // derivative; the wedge identity fixes this reading.
  const auto dx = [&](bool reflect) {
    Vec3 dp{};
    dp[axis] = step;
    const auto weighted = [&](const Vec3& pp) {
      const OnShellMomentum qq{q.mass, pp};
      return normalization(qq) * standard_boost(qq.with_momentum(reflect ? -pp : pp));
    };
    const Matrix4 deriv = (1.0 / (2.0 * step)) * (weighted(q.p + dp) - weighted(q.p - dp));
    const Matrix4 li = reflect ? standard_boost(q) : standard_boost_inverse(q);
    return (-kI / normalization(q)) * (deriv * li);
  };
  const auto [pi_plus, pi_minus] = projectors(q);
  return dx(false) * pi_plus + dx(true) * pi_minus;
}

Matrix2 PauliLubanskiRestricted::casimir() const {
  Matrix2 c = -(w0 * w0);
  for (const auto& wi : w) c += wi * wi;
  return c;
}

PauliLubanskiRestricted pauli_lubanski_restricted(const OnShellMomentum& q,
                                                  const PolarizationBasis& b) {
  if (b.kind() != BasisKind::helicity)
    throw std::domain_error("pauli_lubanski_restricted: requires the helicity basis");
  const double e = energy(q);
  const double n = q.p.norm();
  PauliLubanskiRestricted out;
  out.w0 = (0.5 * n) * pauli(2);
  const auto sigma = sigma_matrices(b, q.p);
  for (int i = 0; i < 3; ++i)
    out.w[static_cast<std::size_t>(i)] =
        (0.5 * q.mass) * sigma[static_cast<std::size_t>(i)] + (q.p[i] / (e + q.mass)) * out.w0;
  return out;
}

}  // namespace pryce
