// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#include "pryce/bases.hpp"

#include <cmath>

#include "pryce/algebra.hpp"

namespace pryce {

void ChartPolicy::require(const Vec3& p) const {
  const double n = p.norm();
  if (n <= zero_tol) throw ZeroMomentumError(p);
  if (n + p.z <= axis_tol * n)
    throw ChartSingularityError(
        "momentum in excluded cone around -e3 (helicity chart singularity)", p);
}

Matrix2 helicity_rotation(const Vec3& p, const ChartPolicy& chart) {
  chart.require(p);
  const double n = p.norm();
  const double pref = std::sqrt((n + p.z) / (2.0 * n));
  const Matrix2 a = (1.0 / (n + p.z)) * (p.x * pauli(1) - p.y * pauli(0));
  return pref * (Matrix2::identity() - cplx{0.0, 1.0} * a);
}

Matrix2 PolarizationBasis::frame(const Vec3& p) const {
  if (momentum_dependent()) chart_.require(p);
  return frame_(p);
}

Spinor2 PolarizationBasis::xi(int sigma_index, const Vec3& p) const {
  const Matrix2 f = frame(p);
  Spinor2 s;
  s[0] = f(0, static_cast<std::size_t>(sigma_index));
  s[1] = f(1, static_cast<std::size_t>(sigma_index));
  return s;
}

Vec3 PolarizationBasis::direction(const Vec3& p) const {
  if (!direction_) throw std::domain_error("polarization basis has no direction n(p)");
  if (momentum_dependent()) chart_.require(p);
  return direction_(p);
}

Matrix2 conjugate_frame(const Matrix2& xi_frame) {
  const Matrix2 is2 = cplx{0.0, 1.0} * pauli(1);
  return is2 * xi_frame.conjugate();
}

ConjugateBasis conjugate_basis(const PolarizationBasis& b, const Vec3& p) {
  return {conjugate_frame(b.frame(p))};
}

PolarizationBasis spin_basis() {
  return {BasisKind::spin, [](const Vec3&) { return Matrix2::identity(); },
          [](const Vec3&) { return Vec3{0.0, 0.0, 1.0}; }};
}

PolarizationBasis helicity_basis(double mass_scale) {
  ChartPolicy chart;
  chart.zero_tol = 1e-10 * mass_scale;
  return {BasisKind::helicity,
          [chart](const Vec3& p) { return helicity_rotation(p, chart); },
          [](const Vec3& p) { return (1.0 / p.norm()) * p; }, chart};
}

std::vector<Vec3> default_validation_points() {
  return {{0.3, 0.0, 0.0},  {0.0, 0.5, 0.0},   {0.0, 0.0, 0.7},
          {0.4, -0.7, 0.9}, {-1.2, 0.3, -0.4}, {2.0, 2.0, 2.0},
          {1e-3, 2e-3, 3e-3}};
}

PolarizationBasis custom_basis(PolarizationBasis::FrameFn frame,
                               PolarizationBasis::DirectionFn direction,
                               const std::vector<Vec3>& validation_points,
                               double tolerance, ChartPolicy chart) {
  for (const Vec3& p : validation_points) {
    if (!chart.in_chart(p)) continue;
    const Matrix2 f = frame(p);
    const double ortho = max_abs_diff(f.adjoint() * f, Matrix2::identity());
    const double complete = max_abs_diff(f * f.adjoint(), Matrix2::identity());
    const double v = std::max(ortho, complete);
    if (v > tolerance) throw NonOrthonormalError(p, v);
  }
  return {BasisKind::custom, std::move(frame), std::move(direction), chart};
}

}  // namespace pryce
