#pragma once

// Complex 2x2 matrices: Pauli algebra, spin-1/2 operators and the closed-form
// exponential exp(i v.sigma) used by every spin-valued phase in the library.

#include <array>
#include <complex>
#include <cmath>

#include "rotqm/vec3.hpp"

namespace rotqm {

using cd = std::complex<double>;

/// Row-major complex 2x2 matrix.
struct Mat2c {
  std::array<cd, 4> a{};  // [ a0 a1 ; a2 a3 ]

  constexpr cd& operator()(int r, int c) { return a[2 * r + c]; }
  constexpr const cd& operator()(int r, int c) const { return a[2 * r + c]; }

  static constexpr Mat2c zero() { return {}; }
  static constexpr Mat2c identity() { return {{cd(1), cd(0), cd(0), cd(1)}}; }

  Mat2c operator+(const Mat2c& r) const {
    Mat2c m;
    for (int i = 0; i < 4; ++i) m.a[i] = a[i] + r.a[i];
    return m;
  }
  Mat2c operator-(const Mat2c& r) const {
    Mat2c m;
    for (int i = 0; i < 4; ++i) m.a[i] = a[i] - r.a[i];
    return m;
  }
  Mat2c operator*(const Mat2c& r) const {
    Mat2c m;
    m.a[0] = a[0] * r.a[0] + a[1] * r.a[2];
    m.a[1] = a[0] * r.a[1] + a[1] * r.a[3];
    m.a[2] = a[2] * r.a[0] + a[3] * r.a[2];
    m.a[3] = a[2] * r.a[1] + a[3] * r.a[3];
    return m;
  }
};

inline Mat2c operator*(cd s, const Mat2c& m) {
  Mat2c r;
  for (int i = 0; i < 4; ++i) r.a[i] = s * m.a[i];
  return r;
}

inline Mat2c adjoint(const Mat2c& m) {
  return {{std::conj(m.a[0]), std::conj(m.a[2]), std::conj(m.a[1]), std::conj(m.a[3])}};
}

inline cd trace(const Mat2c& m) { return m.a[0] + m.a[3]; }

inline double frobenius_norm(const Mat2c& m) {
  double s = 0.0;
  for (const cd& v : m.a) s += std::norm(v);
  return std::sqrt(s);
}

/// Pauli matrices sigma_x, sigma_y, sigma_z (axis = 0,1,2).
inline Mat2c pauli(int axis) {
  const cd i(0.0, 1.0);
  switch (axis) {
    case 0: return {{cd(0), cd(1), cd(1), cd(0)}};
    case 1: return {{cd(0), -i, i, cd(0)}};
    default: return {{cd(1), cd(0), cd(0), cd(-1)}};
  }
}

/// sigma . v
inline Mat2c pauli_dot(const Vec3& v) {
  const cd i(0.0, 1.0);
  Mat2c m;
  m.a[0] = cd(v.z);
  m.a[1] = cd(v.x) - i * cd(v.y);
  m.a[2] = cd(v.x) + i * cd(v.y);
  m.a[3] = cd(-v.z);
  return m;
}

/// Spin operator S = (hbar/2) sigma along a coordinate axis.
inline Mat2c spin_matrix(int axis, double hbar) { return cd(hbar / 2.0) * pauli(axis); }

/// The 2x2 type used for spin-valued phase operators.
using SpinOperator = Mat2c;

/// exp(i v.sigma) = cos|v| I + i sin|v| (v_hat.sigma), exact; v = 0 gives the
/// identity without dividing by |v|.
inline Mat2c pauli_exponential(const Vec3& v) {
  const double a = norm(v);
  if (a == 0.0) return Mat2c::identity();
  const cd i(0.0, 1.0);
  Mat2c m = cd(std::cos(a)) * Mat2c::identity();
  return m + (i * cd(std::sin(a) / a)) * pauli_dot(v);
}

/// Unitarity residual ||U^dag U - I||_F.
inline double unitarity_residual(const Mat2c& u) {
  return frobenius_norm(adjoint(u) * u - Mat2c::identity());
}

/// Nearest SU(2) element of a near-SU(2) matrix [[a, b], [-b*, a*]]; removes
/// rounding drift accumulated by long ordered products of exact unitaries.
inline Mat2c su2_project(const Mat2c& m) {
  const cd a = 0.5 * (m.a[0] + std::conj(m.a[3]));
  const cd b = 0.5 * (m.a[1] - std::conj(m.a[2]));
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  if (n == 0.0) return m;
  return {{a / n, b / n, -std::conj(b) / n, std::conj(a) / n}};
}

}  // namespace rotqm
