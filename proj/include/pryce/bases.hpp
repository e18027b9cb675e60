// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pryce/matrix.hpp"
#include "pryce/vec.hpp"

namespace pryce {

/// Momentum rejected because it lies in the excluded region of the basis
/// chart (helicity rotation is singular along -e3 and undefined at p = 0).
class ChartSingularityError : public std::domain_error {
 public:
  ChartSingularityError(const std::string& what, Vec3 p)
      : std::domain_error(what), momentum(p) {}
  Vec3 momentum;
};

class ZeroMomentumError : public ChartSingularityError {
 public:
  explicit ZeroMomentumError(Vec3 p)
      : ChartSingularityError("helicity basis undefined at p = 0", p) {}
};

/// Custom-basis validation failure; carries the offending momentum.
class NonOrthonormalError : public std::domain_error {
 public:
  NonOrthonormalError(Vec3 p, double violation)
      : std::domain_error("basis spinors not orthonormal (violation " +
                          std::to_string(violation) + ")"),
        momentum(p) {}
  Vec3 momentum;
};

/// Chart exclusions for momentum-dependent bases: reject |p| <= zero_tol and
/// the cone p + p3 <= axis_tol * |p| around the negative 3-axis.
struct ChartPolicy {
  double zero_tol = 1e-10;
  double axis_tol = 1e-6;

  bool in_chart(const Vec3& p) const {
    const double n = p.norm();
    return n > zero_tol && n + p.z > axis_tol * n;
  }
  void require(const Vec3& p) const;
};

enum class BasisKind { spin, helicity, custom };

/// SU(2) rotation taking e3 to p/|p|:
/// r_h(p) = sqrt((|p|+p3)/(2|p|)) [1 - i (p1 sigma2 - p2 sigma1)/(|p|+p3)].
/// Throws ZeroMomentumError / ChartSingularityError off the chart.
Matrix2 helicity_rotation(const Vec3& p, const ChartPolicy& chart = {});

/// An orthonormal pair of Pauli spinors per momentum, packed as the columns
/// of a 2x2 frame matrix [xi_{+1/2}, xi_{-1/2}], plus an optional
/// polarization direction n(p). Immutable after construction.
class PolarizationBasis {
 public:
  using FrameFn = std::function<Matrix2(const Vec3&)>;
  using DirectionFn = std::function<Vec3(const Vec3&)>;

  PolarizationBasis(BasisKind kind, FrameFn frame, DirectionFn direction,
                    ChartPolicy chart = {})
      : kind_(kind), frame_(std::move(frame)), direction_(std::move(direction)),
        chart_(chart) {}

  BasisKind kind() const { return kind_; }
  const ChartPolicy& chart() const { return chart_; }

  /// Frame matrix at p; validates the chart for momentum-dependent bases.
  Matrix2 frame(const Vec3& p) const;

  /// xi_sigma(p); sigma_index 0 is sigma=+1/2, 1 is sigma=-1/2.
  Spinor2 xi(int sigma_index, const Vec3& p) const;

  bool has_direction() const { return static_cast<bool>(direction_); }
  Vec3 direction(const Vec3& p) const;

  bool momentum_dependent() const { return kind_ != BasisKind::spin; }

 private:
  BasisKind kind_;
  FrameFn frame_;
  DirectionFn direction_;
  ChartPolicy chart_;
};

/// Charge-conjugate partners eta_sigma = i sigma_2 xi_sigma^*.
struct ConjugateBasis {
  Matrix2 frame;  // columns eta_{+1/2}, eta_{-1/2}

  Spinor2 eta(int sigma_index) const {
    Spinor2 s;
    s[0] = frame(0, static_cast<std::size_t>(sigma_index));
    s[1] = frame(1, static_cast<std::size_t>(sigma_index));
    return s;
  }
};

/// eta columns from a frame of xi columns.
Matrix2 conjugate_frame(const Matrix2& xi_frame);

ConjugateBasis conjugate_basis(const PolarizationBasis& b, const Vec3& p);

/// Momentum-spin basis: xi_{+1/2} = (1,0), xi_{-1/2} = (0,1), n = e3.
PolarizationBasis spin_basis();

/// Momentum-helicity basis xi_sigma(p) = r_h(p) xi_sigma with n(p) = p/|p|.
/// mass_scale sets the zero-momentum rejection threshold 1e-10 * mass_scale.
PolarizationBasis helicity_basis(double mass_scale = 1.0);

/// User-supplied basis. The provider is validated (orthonormality and
/// completeness) at `validation_points`; throws NonOrthonormalError naming
/// the first offending momentum.
PolarizationBasis custom_basis(PolarizationBasis::FrameFn frame,
                               PolarizationBasis::DirectionFn direction,
                               const std::vector<Vec3>& validation_points,
                               double tolerance = 1e-10, ChartPolicy chart = {});

/// Default validation momenta for custom bases (a small deterministic set).
std::vector<Vec3> default_validation_points();

}  // namespace pryce
