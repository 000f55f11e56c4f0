#pragma once

// Dense matrix realizations of the grid operators, for desk-scale spectra and
// operator-identity checks. Momentum is the spectral derivative (built by
// transforming basis vectors with the same FFT the propagator uses), so
// matrix identities hold to rounding against the split-step machinery.
//
// Layouts match WaveState: row-major grid flattening, spinor component major
// (2-spinor matrices are kron(spin 2x2, space NxN); 4-spinor analogously).

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "rotqm/fft.hpp"
#include "rotqm/gamma.hpp"
#include "rotqm/gauge_field.hpp"
#include "rotqm/grid.hpp"
#include "rotqm/mat2.hpp"
#include "rotqm/metric.hpp"
#include "rotqm/setup.hpp"

namespace rotqm {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

inline MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

inline MatrixXcd to_eigen(const Mat2c& m) {
  MatrixXcd r(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = m(i, j);
  return r;
}

inline MatrixXcd to_eigen(const Mat4c& m) {
  MatrixXcd r(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = m(i, j);
  return r;
}

/// 1-D spectral momentum matrix p = F^dag diag(hbar k) F on n points.
inline MatrixXcd momentum_matrix_1d(std::size_t n, double spacing, double hbar) {
  GridSpec g = GridSpec::make1d(n, 0.0, spacing);
  Fft fft(n);
  MatrixXcd p(n, n);
  std::vector<std::complex<double>> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(col.begin(), col.end(), std::complex<double>(0.0, 0.0));
    col[j] = 1.0;
    fft.forward(col.data());
    for (std::size_t k = 0; k < n; ++k) col[k] *= hbar * g.wavenumber(0, k);
    fft.inverse(col.data());
    for (std::size_t i = 0; i < n; ++i) p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = col[i];
  }
  return p;
}

/// Momentum along one grid axis, embedded in the full flattened space.
inline MatrixXcd momentum_matrix(const GridSpec& g, int axis, double hbar) {
  MatrixXcd m = MatrixXcd::Identity(1, 1);
  for (int a = 0; a < g.dim; ++a) {
    const auto n = static_cast<Eigen::Index>(g.axes[a].n);
    if (a == axis)
      m = kron(m, momentum_matrix_1d(g.axes[a].n, g.axes[a].spacing, hbar));
    else
      m = kron(m, MatrixXcd::Identity(n, n));
  }
  return m;
}

/// Multiplication operator diag(f(x)).
inline MatrixXcd diagonal_field(const GridSpec& g, const std::function<double(const Vec3&)>& f) {
  const auto n = static_cast<Eigen::Index>(g.num_points());
  MatrixXcd m = MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = f(g.point(static_cast<std::size_t>(i)));
  return m;
}

inline MatrixXcd position_matrix(const GridSpec& g, int axis) {
  return diagonal_field(g, [axis](const Vec3& x) { return x[axis]; });
}

/// Spectrally exact kinetic energy sum_a p_a^2 / 2m.
inline MatrixXcd kinetic_matrix(const GridSpec& g, double mass, double hbar) {
  const auto n = static_cast<Eigen::Index>(g.num_points());
  MatrixXcd k = MatrixXcd::Zero(n, n);
  for (int a = 0; a < g.dim; ++a) {
    const MatrixXcd p = momentum_matrix(g, a, hbar);
    k += p * p;
  }
  return k / (2.0 * mass);
}

/// Component of L = x cross p; identically zero when the needed coordinate
/// axes are absent from the grid (e.g. any component on a 1-D grid).
inline MatrixXcd angular_momentum_matrix(const GridSpec& g, int component, double hbar) {
  const auto n = static_cast<Eigen::Index>(g.num_points());
  const int i = (component + 1) % 3;
  const int j = (component + 2) % 3;  // L_c = x_i p_j - x_j p_i
  if (i >= g.dim || j >= g.dim) return MatrixXcd::Zero(n, n);
  return position_matrix(g, i) * momentum_matrix(g, j, hbar) -
         position_matrix(g, j) * momentum_matrix(g, i, hbar);
}

// ---------------------------------------------------------------------------
// Rotating-frame Hamiltonians
// ---------------------------------------------------------------------------

/// Minimal-coupling form (p - m A)^2/2m + m A0 for an arbitrary gauge field.
/// All three components of A contribute; p_a vanishes on axes absent from the
/// grid (the slice carries no dependence on them).
inline MatrixXcd minimal_coupling_matrix(const GridSpec& g, const GaugeField& field, double mass,
                                         double hbar) {
  const auto n = static_cast<Eigen::Index>(g.num_points());
  MatrixXcd h = MatrixXcd::Zero(n, n);
  for (int a = 0; a < 3; ++a) {
    const MatrixXcd pa = (a < g.dim) ? momentum_matrix(g, a, hbar) : MatrixXcd::Zero(n, n);
    const MatrixXcd wa = diagonal_field(g, [&, a](const Vec3& x) { return mass * field.avec(x)[a]; });
    const MatrixXcd b = pa - wa;
    h += b * b;
  }
  h /= 2.0 * mass;
  h += diagonal_field(g, [&](const Vec3& x) { return mass * field.a0(x); });
  return h;
}

/// H3 = (p - m Omega x r)^2/2m - m (Omega x r)^2/2 (scalar, NxN).
inline MatrixXcd h3_matrix(const RotationSetup& su, const GridSpec& g) {
  return minimal_coupling_matrix(g, GaugeField::rotating(su.omega), su.mass, su.hbar);
}

/// The grouped form p^2/2m - Omega.L; equals h3_matrix to rounding.
inline MatrixXcd grouped_matrix(const RotationSetup& su, const GridSpec& g) {
  MatrixXcd h = kinetic_matrix(g, su.mass, su.hbar);
  for (int c = 0; c < 3; ++c)
    if (su.omega[c] != 0.0) h -= su.omega[c] * angular_momentum_matrix(g, c, su.hbar);
  return h;
}

/// H4 = I2 (x) H3 - Omega.S (2-spinor, 2N x 2N).
inline MatrixXcd h4_matrix(const RotationSetup& su, const GridSpec& g) {
  const auto n = static_cast<Eigen::Index>(g.num_points());
  MatrixXcd h = kron(MatrixXcd::Identity(2, 2), h3_matrix(su, g));
  for (int c = 0; c < 3; ++c)
    if (su.omega[c] != 0.0)
      h -= su.omega[c] * kron(to_eigen(spin_matrix(c, su.hbar)), MatrixXcd::Identity(n, n));
  return h;
}

/// Pauli Hamiltonian H5 = (p - m A - S x E)^2/2m + m A0 - (hbar/4) sigma.curl A
/// with E = Omega^2 r_perp / c^2; the spin term equals -Omega.S for the
/// rotating field. include_efield = false drops E (then H5 = H4 as matrices).
inline MatrixXcd h5_matrix(const RotationSetup& su, const GridSpec& g, bool include_efield = true) {
  const auto n = static_cast<Eigen::Index>(g.num_points());
  const MatrixXcd id2 = MatrixXcd::Identity(2, 2);
  const MatrixXcd idn = MatrixXcd::Identity(n, n);
  const GaugeField field = GaugeField::rotating(su.omega);
  const EffectiveFields eff = effective_fields(su);

  MatrixXcd h = MatrixXcd::Zero(2 * n, 2 * n);
  for (int a = 0; a < 3; ++a) {
    // W_a = m A_a + (S x E)_a as a 2x2-valued multiplication operator
    MatrixXcd wa = kron(id2, diagonal_field(g, [&, a](const Vec3& x) { return su.mass * field.avec(x)[a]; }));
    if (include_efield) {
      // (S x E)_a = S_{a+1} E_{a+2} - S_{a+2} E_{a+1} (indices mod 3)
      const int b1 = (a + 1) % 3, c1 = (a + 2) % 3;
      wa += kron(to_eigen(spin_matrix(b1, su.hbar)),
                 diagonal_field(g, [&, c1](const Vec3& x) { return eff.efield(x)[c1]; }));
      wa -= kron(to_eigen(spin_matrix(c1, su.hbar)),
                 diagonal_field(g, [&, b1](const Vec3& x) { return eff.efield(x)[b1]; }));
    }
    MatrixXcd pa = (a < g.dim) ? momentum_matrix(g, a, su.hbar) : MatrixXcd::Zero(n, n);
    const MatrixXcd b = kron(id2, pa) - wa;
    h += b * b;
  }
  h /= 2.0 * su.mass;
  h += kron(id2, diagonal_field(g, [&](const Vec3& x) { return su.mass * field.a0(x); }));
  // spin-rotation term -(hbar/4) sigma.(curl A), curl A = 2 Omega
  for (int c = 0; c < 3; ++c)
    if (su.omega[c] != 0.0) h -= su.omega[c] * kron(to_eigen(spin_matrix(c, su.hbar)), idn);
  return h;
}

/// Weak-field Schroedinger Hamiltonian (p_i + m c h_0i)^2/2m + m c^2 h_00 / 2
/// built from a static metric; reproduces h3_matrix for the rotating metric.
inline MatrixXcd weakfield_schrodinger_matrix(const WeakMetric& metric, const RotationSetup& su,
                                              const GridSpec& g) {
  GaugeField f;
  const WeakMetric m = metric;
  const double c = su.c;
  f.a0 = [m, c](const Vec3& x) { return 0.5 * c * c * m.eval(x)[0][0]; };
  f.avec = [m, c](const Vec3& x) {
    const Mat4d h = m.eval(x);
    return Vec3{-c * h[0][1], -c * h[0][2], -c * h[0][3]};
  };
  return minimal_coupling_matrix(g, f, su.mass, su.hbar);
}

inline double hermiticity_residual(const MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace rotqm
