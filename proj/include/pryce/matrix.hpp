// Copyright 2026 The prycelib Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>
#include <stdexcept>

#include "pryce/vec.hpp"

namespace pryce {

using cplx = std::complex<double>;

/// Dense NxN complex matrix with value semantics. Sized for the Pauli (N=2)
/// and Dirac (N=4) spaces; everything is stack-allocated.
template <std::size_t N>
class SquareMatrix {
 public:
  SquareMatrix() = default;

  static SquareMatrix zero() { return SquareMatrix{}; }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  cplx operator()(std::size_t r, std::size_t c) const { return e_[N * r + c]; }
  cplx& operator()(std::size_t r, std::size_t c) { return e_[N * r + c]; }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) e_[i] += o.e_[i];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) e_[i] -= o.e_[i];
    return *this;
  }
  SquareMatrix& operator*=(cplx s) {
    for (std::size_t i = 0; i < N * N; ++i) e_[i] *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(cplx s, SquareMatrix m) { return m *= s; }
  friend SquareMatrix operator*(SquareMatrix m, cplx s) { return m *= s; }
  friend SquareMatrix operator-(SquareMatrix m) { return m *= -1.0; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx ark = a(r, k);
        for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }

  SquareMatrix adjoint() const {
    SquareMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
  }

  SquareMatrix transpose() const {
    SquareMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(r, c) = (*this)(c, r);
    return m;
  }

  SquareMatrix conjugate() const {
    SquareMatrix m = *this;
    for (auto& v : m.e_) v = std::conj(v);
    return m;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double d = 0.0;
    for (const auto& v : e_) d = std::max(d, std::abs(v));
    return d;
  }

  bool is_finite() const {
    for (const auto& v : e_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

  /// Gauss-Jordan with partial pivoting; throws on singular input.
  SquareMatrix inverse() const {
    std::array<cplx, N * N> a = e_;
    SquareMatrix inv = identity();
    auto at = [](std::array<cplx, N * N>& m, std::size_t r, std::size_t c) -> cplx& {
      return m[N * r + c];
    };
    for (std::size_t col = 0; col < N; ++col) {
      std::size_t piv = col;
      double best = std::abs(at(a, col, col));
      for (std::size_t r = col + 1; r < N; ++r)
        if (std::abs(at(a, r, col)) > best) best = std::abs(at(a, r, col)), piv = r;
      if (best < 1e-300) throw std::domain_error("SquareMatrix::inverse: singular matrix");
      if (piv != col)
        for (std::size_t c = 0; c < N; ++c) {
          std::swap(at(a, piv, c), at(a, col, c));
          std::swap(inv(piv, c), inv(col, c));
        }
      const cplx d = at(a, col, col);
      for (std::size_t c = 0; c < N; ++c) at(a, col, c) /= d, inv(col, c) /= d;
      for (std::size_t r = 0; r < N; ++r) {
        if (r == col) continue;
        const cplx f = at(a, r, col);
        if (f == cplx{}) continue;
        for (std::size_t c = 0; c < N; ++c) {
          at(a, r, c) -= f * at(a, col, c);
          inv(r, c) -= f * inv(col, c);
        }
      }
    }
    return inv;
  }

  cplx determinant() const {
    std::array<cplx, N * N> a = e_;
    auto at = [](std::array<cplx, N * N>& m, std::size_t r, std::size_t c) -> cplx& {
      return m[N * r + c];
    };
    cplx det = 1.0;
    for (std::size_t col = 0; col < N; ++col) {
      std::size_t piv = col;
      double best = std::abs(at(a, col, col));
      for (std::size_t r = col + 1; r < N; ++r)
        if (std::abs(at(a, r, col)) > best) best = std::abs(at(a, r, col)), piv = r;
      if (best == 0.0) return 0.0;
      if (piv != col) {
        det = -det;
        for (std::size_t c = col; c < N; ++c) std::swap(at(a, piv, c), at(a, col, c));
      }
      det *= at(a, col, col);
      for (std::size_t r = col + 1; r < N; ++r) {
        const cplx f = at(a, r, col) / at(a, col, col);
        for (std::size_t c = col; c < N; ++c) at(a, r, c) -= f * at(a, col, c);
      }
    }
    return det;
  }

  friend std::ostream& operator<<(std::ostream& os, const SquareMatrix& m) {
    for (std::size_t r = 0; r < N; ++r) {
      os << (r == 0 ? "[" : " ");
      for (std::size_t c = 0; c < N; ++c) os << m(r, c) << (c + 1 < N ? ", " : "");
      os << (r + 1 < N ? "\n" : "]");
    }
    return os;
  }

 private:
  std::array<cplx, N * N> e_{};
};

using Matrix2 = SquareMatrix<2>;
using Matrix4 = SquareMatrix<4>;

/// Complex column vector; Spinor2 lives in Pauli space, Spinor4 in Dirac space.
template <std::size_t N>
class ColumnVector {
 public:
  ColumnVector() = default;

  cplx operator[](std::size_t i) const { return e_[i]; }
  cplx& operator[](std::size_t i) { return e_[i]; }

  ColumnVector& operator+=(const ColumnVector& o) {
    for (std::size_t i = 0; i < N; ++i) e_[i] += o.e_[i];
    return *this;
  }
  ColumnVector& operator-=(const ColumnVector& o) {
    for (std::size_t i = 0; i < N; ++i) e_[i] -= o.e_[i];
    return *this;
  }
  ColumnVector& operator*=(cplx s) {
    for (std::size_t i = 0; i < N; ++i) e_[i] *= s;
    return *this;
  }
  friend ColumnVector operator+(ColumnVector a, const ColumnVector& b) { return a += b; }
  friend ColumnVector operator-(ColumnVector a, const ColumnVector& b) { return a -= b; }
  friend ColumnVector operator*(cplx s, ColumnVector v) { return v *= s; }
  friend ColumnVector operator-(ColumnVector v) { return v *= -1.0; }

  ColumnVector conjugate() const {
    ColumnVector v = *this;
    for (std::size_t i = 0; i < N; ++i) v.e_[i] = std::conj(v.e_[i]);
    return v;
  }

  double norm() const {
    double s = 0.0;
    for (const auto& v : e_) s += std::norm(v);
    return std::sqrt(s);
  }

  bool is_finite() const {
    for (const auto& v : e_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

 private:
  std::array<cplx, N> e_{};
};

using Spinor2 = ColumnVector<2>;
using Spinor4 = ColumnVector<4>;

template <std::size_t N>
ColumnVector<N> operator*(const SquareMatrix<N>& m, const ColumnVector<N>& v) {
  ColumnVector<N> out;
  for (std::size_t r = 0; r < N; ++r) {
    cplx s = 0.0;
    for (std::size_t c = 0; c < N; ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

/// <a|b> = sum conj(a_i) b_i
template <std::size_t N>
cplx dot(const ColumnVector<N>& a, const ColumnVector<N>& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// |a><b|
template <std::size_t N>
SquareMatrix<N> outer(const ColumnVector<N>& a, const ColumnVector<N>& b) {
  SquareMatrix<N> m;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

template <std::size_t N>
SquareMatrix<N> commutator(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return a * b - b * a;
}

template <std::size_t N>
SquareMatrix<N> anticommutator(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return a * b + b * a;
}

template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return (a - b).max_abs();
}

/// Matrix exponential by scaling-and-squaring with a Taylor series driven to
/// machine precision. Fine for the small, moderately scaled matrices here.
template <std::size_t N>
SquareMatrix<N> expm(const SquareMatrix<N>& m) {
  int squarings = 0;
  double scale = m.max_abs();
  while (scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  SquareMatrix<N> a = m;
  a *= std::pow(0.5, squarings);
  SquareMatrix<N> result = SquareMatrix<N>::identity();
  SquareMatrix<N> term = SquareMatrix<N>::identity();
  for (int k = 1; k < 64; ++k) {
    term = term * a;
    term *= 1.0 / static_cast<double>(k);
    result += term;
    if (term.max_abs() < 1e-18 * std::max(1.0, result.max_abs())) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

inline Matrix4 from_blocks(const Matrix2& a, const Matrix2& b, const Matrix2& c,
                           const Matrix2& d) {
  Matrix4 m;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t cc = 0; cc < 2; ++cc) {
      m(r, cc) = a(r, cc);
      m(r, cc + 2) = b(r, cc);
      m(r + 2, cc) = c(r, cc);
      m(r + 2, cc + 2) = d(r, cc);
    }
  return m;
}

inline Matrix2 block_of(const Matrix4& m, std::size_t br, std::size_t bc) {
  Matrix2 out;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) out(r, c) = m(br * 2 + r, bc * 2 + c);
  return out;
}

inline Spinor4 stack(const Spinor2& upper, const Spinor2& lower) {
  Spinor4 s;
  s[0] = upper[0];
  s[1] = upper[1];
  s[2] = lower[0];
  s[3] = lower[1];
  return s;
}

}  // namespace pryce
