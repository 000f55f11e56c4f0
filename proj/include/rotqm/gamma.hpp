#pragma once

// Dirac matrices in the standard (Dirac) representation, where the split into
// upper and lower 2-spinors is block-diagonal in gamma^0:
//
//   gamma^0 = diag(I, -I),  gamma^i = [[0, sigma_i], [-sigma_i, 0]],
//   {gamma^a, gamma^b} = 2 eta^ab,  eta = diag(+,-,-,-).

#include <array>
#include <complex>

#include "rotqm/mat2.hpp"

namespace rotqm {

/// Row-major complex 4x4 matrix.
struct Mat4c {
  std::array<cd, 16> a{};

  cd& operator()(int r, int c) { return a[4 * r + c]; }
  const cd& operator()(int r, int c) const { return a[4 * r + c]; }

  static Mat4c zero() { return {}; }
  static Mat4c identity() {
    Mat4c m;
    for (int i = 0; i < 4; ++i) m(i, i) = cd(1.0);
    return m;
  }

  Mat4c operator+(const Mat4c& r) const {
    Mat4c m;
    for (int i = 0; i < 16; ++i) m.a[i] = a[i] + r.a[i];
    return m;
  }
  Mat4c operator-(const Mat4c& r) const {
    Mat4c m;
    for (int i = 0; i < 16; ++i) m.a[i] = a[i] - r.a[i];
    return m;
  }
  Mat4c operator*(const Mat4c& r) const {
    Mat4c m;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        const cd v = (*this)(i, k);
        if (v == cd(0.0)) continue;
        for (int j = 0; j < 4; ++j) m(i, j) += v * r(k, j);
      }
    return m;
  }
};

inline Mat4c operator*(cd s, const Mat4c& m) {
  Mat4c r;
  for (int i = 0; i < 16; ++i) r.a[i] = s * m.a[i];
  return r;
}

inline Mat4c adjoint4(const Mat4c& m) {
  Mat4c r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

inline double frobenius_norm(const Mat4c& m) {
  double s = 0.0;
  for (const cd& v : m.a) s += std::norm(v);
  return std::sqrt(s);
}

/// Minkowski metric diag(+,-,-,-).
inline double eta(int a, int b) { return a != b ? 0.0 : (a == 0 ? 1.0 : -1.0); }

/// gamma^a for a = 0..3 (flat index).
inline Mat4c gamma_matrix(int a) {
  Mat4c g;
  if (a == 0) {
    g(0, 0) = g(1, 1) = cd(1.0);
    g(2, 2) = g(3, 3) = cd(-1.0);
    return g;
  }
  const Mat2c s = pauli(a - 1);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      g(r, c + 2) = s(r, c);
      g(r + 2, c) = cd(-1.0) * s(r, c);
    }
  return g;
}

/// alpha_i = gamma^0 gamma^i = [[0, sigma_i], [sigma_i, 0]].
inline Mat4c alpha_matrix(int i) { return gamma_matrix(0) * gamma_matrix(i + 1); }

/// Sigma_i = diag(sigma_i, sigma_i), the 4-spinor spin matrices.
inline Mat4c sigma4_matrix(int i) {
  Mat4c m;
  const Mat2c s = pauli(i);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      m(r, c) = s(r, c);
      m(r + 2, c + 2) = s(r, c);
    }
  return m;
}

/// Lorentz generators M^ab = (i/2)[gamma^a, gamma^b].
inline Mat4c lorentz_generator(int a, int b) {
  const Mat4c ga = gamma_matrix(a);
  const Mat4c gb = gamma_matrix(b);
  return cd(0.0, 0.5) * (ga * gb - gb * ga);
}

}  // namespace rotqm
