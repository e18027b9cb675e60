// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#include "pryce/connection.hpp"

#include <cmath>
#include <stdexcept>

#include "pryce/algebra.hpp"

namespace pryce {

namespace {
constexpr cplx kI{0.0, 1.0};
}

std::array<Matrix2, 3> sigma_matrices(const PolarizationBasis& b, const Vec3& p) {
  const Matrix2 f = b.frame(p);
  const Matrix2 fa = f.adjoint();
  return {fa * pauli(0) * f, fa * pauli(1) * f, fa * pauli(2) * f};
}

std::array<Matrix2, 3> sigma_matrices_helicity_closed(const Vec3& p) {
  const double n = p.norm();
  const Matrix2 perp = p.x * pauli(0) + p.y * pauli(1);
  std::array<Matrix2, 3> out;
  out[0] = (p.x / n) * pauli(2) - (p.x / (n * (n + p.z))) * perp + pauli(0);
  out[1] = (p.y / n) * pauli(2) - (p.y / (n * (n + p.z))) * perp + pauli(1);
  out[2] = (p.z / n) * pauli(2) - (1.0 / n) * perp;
  return out;
}

std::array<Matrix2, 3> omega_matrices(const PolarizationBasis& b, const Vec3& p) {
  if (!b.momentum_dependent()) return {};  // constant frame, zero connection
  const double h = 1e-5 * p.norm();
  const Matrix2 fa = b.frame(p).adjoint();
  std::array<Matrix2, 3> out;
  for (int i = 0; i < 3; ++i) {
    Vec3 dp{};
    dp[i] = h;
    const Matrix2 d = (1.0 / (2.0 * h)) * (b.frame(p + dp) - b.frame(p - dp));
    out[static_cast<std::size_t>(i)] = fa * d;
  }
  return out;
}

std::array<Matrix2, 3> omega_matrices_helicity_closed(const Vec3& p) {
  const double n = p.norm();
  const double px = p.x, py = p.y, pz = p.z;
  const double c = 1.0 / (2.0 * n * n * (n + pz));
  std::array<Matrix2, 3> out;
  out[0] = (-kI * c) *
           (px * py * pauli(0) + n * py * pauli(2) + (n * pz + py * py + pz * pz) * pauli(1));
  out[1] = (kI * c) *
           (px * py * pauli(1) + n * px * pauli(2) + (n * pz + px * px + pz * pz) * pauli(0));
  out[2] = (kI / (2.0 * n * n)) * (px * pauli(1) - py * pauli(0));
  return out;
}

Spinor2 covariant_derivative(const PolarizationBasis& b, const ProfileFn& f, int axis,
                             const Vec3& p, double fd_scale) {
  if (axis < 0 || axis > 2) throw std::out_of_range("covariant_derivative: axis must be 0..2");
  const double h = 1e-4 * std::max(p.norm(), fd_scale);
  Vec3 dp{};
  dp[axis] = h;
  Spinor2 out = cplx{1.0 / (2.0 * h)} * (f(p + dp) - f(p - dp));
  if (b.momentum_dependent()) {
    const auto omega = omega_matrices(b, p);
    out += omega[static_cast<std::size_t>(axis)] * f(p);
  }
  return out;
}

WignerMatrix wigner_matrix(const Matrix4& lambda, const PolarizationBasis& b,
                           const OnShellMomentum& q) {
  const LorentzMatrix big = lorentz_from_sl2(lambda);
  const FourVector mapped = big.inverse() * four_momentum(q);
  const Vec3 p_prime = mapped.spatial();
  const OnShellMomentum q_prime{q.mass, p_prime};
  const Matrix2 lam_hat = block_of(lambda, 0, 0);
  const Matrix2 w =
      standard_boost_upper_inverse(q) * lam_hat * standard_boost_upper(q_prime);
  return {b.frame(q.p).adjoint() * w * b.frame(p_prime), lambda, q.p, p_prime};
}

std::array<Matrix2, 3> boost_generator_matrix_part(const OnShellMomentum& q,
                                                   const PolarizationBasis& b) {
  const auto sigma = sigma_matrices(b, q.p);
  const double c = 1.0 / (2.0 * (energy(q) + q.mass));
  std::array<Matrix2, 3> out;
  for (int i = 0; i < 3; ++i) {
    Matrix2 m;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int eps = levi_civita(i, j, k);
        if (eps) m += (c * eps * q.p[j]) * sigma[static_cast<std::size_t>(k)];
      }
    out[static_cast<std::size_t>(i)] = m;
  }
  return out;
}

GeneratorTable rqm_generator_table(const OnShellMomentum& q, const PolarizationBasis& b) {
  if (b.kind() != BasisKind::helicity)
    throw std::domain_error("rqm_generator_table: requires the helicity basis");
  const double e = energy(q);
  GeneratorTable t;
  t.energy = e;
  t.momentum = q.p;
  t.polarization = 0.5 * pauli(2);
  t.helicity = (0.5 * q.p.norm()) * pauli(2);
  const auto sigma = sigma_matrices(b, q.p);
  for (std::size_t i = 0; i < 3; ++i) t.spin[i] = 0.5 * sigma[i];
  t.boost_matrix = boost_generator_matrix_part(q, b);

  const Vec3 p = q.p;
  const double m = q.mass;
  for (int i = 0; i < 3; ++i) {
    t.orbital[static_cast<std::size_t>(i)] = [b, p, m, i](const ProfileFn& f) {
      Spinor2 out;
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const int eps = levi_civita(i, j, k);
          if (eps)
            out += (-kI * static_cast<double>(eps) * p[j]) * covariant_derivative(b, f, k, p, m);
        }
      return out;
    };
    const Matrix2 ki = t.boost_matrix[static_cast<std::size_t>(i)];
    t.boost[static_cast<std::size_t>(i)] = [b, p, m, e, i, ki](const ProfileFn& f) {
      Spinor2 out = (kI * e) * covariant_derivative(b, f, i, p, m);
      out += (kI * (0.5 * p[i] / e)) * f(p);
      out += ki * f(p);
      return out;
    };
  }
  return t;
}

}  // namespace pryce
