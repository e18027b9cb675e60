// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>

namespace pryce {

/// Real 3-vector (spatial momentum, angles, rapidities).
struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
  friend constexpr Vec3 operator-(Vec3 v) { return {-v.x, -v.y, -v.z}; }

  constexpr double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }
  constexpr Vec3 cross(Vec3 o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }

  friend std::ostream& operator<<(std::ostream& os, Vec3 v) {
    return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
  }
};

/// Levi-Civita symbol with eps(0,1,2) = +1 (spatial indices 0..2).
constexpr int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

/// Contravariant four-vector, metric signature (+,-,-,-).
struct FourVector {
  std::array<double, 4> c{};

  FourVector() = default;
  FourVector(double t, Vec3 v) : c{t, v.x, v.y, v.z} {}
  FourVector(double a0, double a1, double a2, double a3) : c{a0, a1, a2, a3} {}

  double operator[](int mu) const { return c[static_cast<std::size_t>(mu)]; }
  double& operator[](int mu) { return c[static_cast<std::size_t>(mu)]; }
  Vec3 spatial() const { return {c[1], c[2], c[3]}; }

  /// a.b = a^0 b^0 - a.b
  double minkowski_dot(const FourVector& o) const {
    return c[0] * o.c[0] - c[1] * o.c[1] - c[2] * o.c[2] - c[3] * o.c[3];
  }
};

constexpr double metric(int mu, int nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

/// Real 4x4 Lorentz transformation Lambda^mu_nu.
struct LorentzMatrix {
  std::array<double, 16> e{};

  static LorentzMatrix identity() {
    LorentzMatrix m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }

  double operator()(int r, int c) const { return e[static_cast<std::size_t>(4 * r + c)]; }
  double& operator()(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }

  friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
    LorentzMatrix m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) s += a(r, k) * b(k, c);
        m(r, c) = s;
      }
    return m;
  }

  FourVector operator*(const FourVector& v) const {
    FourVector out;
    for (int r = 0; r < 4; ++r) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += (*this)(r, k) * v[k];
      out[r] = s;
    }
    return out;
  }

  LorentzMatrix transpose() const {
    LorentzMatrix m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = (*this)(c, r);
    return m;
  }

  /// Inverse via Lambda^{-1} = eta Lambda^T eta.
  LorentzMatrix inverse() const {
    LorentzMatrix m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = metric(r, r) * (*this)(c, r) * metric(c, c);
    return m;
  }

  double max_abs_diff(const LorentzMatrix& o) const {
    double d = 0.0;
    for (std::size_t i = 0; i < 16; ++i) d = std::max(d, std::abs(e[i] - o.e[i]));
    return d;
  }
};

}  // namespace pryce
