#pragma once

// Low-energy limit of the Dirac equation in the rotating weak-field metric,
// realized as a dense Hamiltonian on 4-spinor grid states, and its Pauli
// reduction to the upper components.
//
// After removing the rest phase exp(-i m c^2 t / hbar), the stationary
// operator reads
//
//   H_D = m c^2 (gamma^0 - 1) + c alpha.(p - m A / 2) + m A0
//         - (A.p + p.A)/4  [ - (i/2) c hbar alpha.E ]
//
// with A_i = -c h_0i, A0 = c^2 h_00 / 2 and E = -(1/2) grad h_00. The bracketed
// odd term descends from the spin connection; it is anti-Hermitian in the flat
// inner product because it carries the curved-measure weight. The similarity
// transform psi -> (1 + h_00/4) psi removes it at first order in h without
// moving the spectrum, so the default realization is the Hermitian form with
// the term dropped; `hermitize = false` keeps it for comparison.
//
// The half-strength m A / 2 coupling is what the first-order vierbein
// produces, and in the upper/lower elimination its commutator term builds the
// full spin-rotation coupling -Omega.S of the Pauli Hamiltonian.

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "rotqm/dense.hpp"
#include "rotqm/hamiltonian.hpp"

namespace rotqm {

/// Gauge data (A0, A, E) extracted from a static weak metric.
struct MetricGaugeData {
  std::function<double(const Vec3&)> a0;
  std::function<Vec3(const Vec3&)> avec;
  std::function<Vec3(const Vec3&)> efield;  // 1/length units
};

inline MetricGaugeData metric_gauge_data(const WeakMetric& metric, double c) {
  MetricGaugeData d;
  const WeakMetric m = metric;
  d.a0 = [m, c](const Vec3& x) { return 0.5 * c * c * m.eval(x)[0][0]; };
  d.avec = [m, c](const Vec3& x) {
    const Mat4d h = m.eval(x);
    return Vec3{-c * h[0][1], -c * h[0][2], -c * h[0][3]};
  };
  d.efield = [m](const Vec3& x) {
    return Vec3{-0.5 * m.derivative(x, 0)[0][0], -0.5 * m.derivative(x, 1)[0][0],
                -0.5 * m.derivative(x, 2)[0][0]};
  };
  return d;
}

/// Dense low-energy Dirac Hamiltonian on 4-spinor grid states (4N x 4N).
inline MatrixXcd low_energy_dirac_matrix(const RotationSetup& su, const WeakMetric& metric,
                                         const GridSpec& g, bool hermitize = true) {
  const std::size_t npts = g.num_points();
  if (npts > 64 * 64)
    throw std::invalid_argument("low_energy_dirac_matrix: grid too large for a dense realization");
  // weak-field precondition
  for (std::size_t f = 0; f < npts; ++f) {
    const double mh = metric.max_abs(g.point(f));
    if (!(mh < 1.0))
      throw std::domain_error("low_energy_dirac_matrix: weak-field bound max|h| < 1 violated on the grid");
  }

  const auto n = static_cast<Eigen::Index>(npts);
  const MatrixXcd id4 = MatrixXcd::Identity(4, 4);
  const MatrixXcd idn = MatrixXcd::Identity(n, n);
  const MetricGaugeData gd = metric_gauge_data(metric, su.c);
  const double m = su.mass, c = su.c, hbar = su.hbar;

  MatrixXcd h = m * c * c * kron(to_eigen(gamma_matrix(0)) - id4, idn);
  for (int a = 0; a < 3; ++a) {
    const MatrixXcd pa = (a < g.dim) ? momentum_matrix(g, a, hbar) : MatrixXcd::Zero(n, n);
    const MatrixXcd aa = diagonal_field(g, [&, a](const Vec3& x) { return gd.avec(x)[a]; });
    h += c * kron(to_eigen(alpha_matrix(a)), pa - 0.5 * m * aa);
    // -(A.p + p.A)/4 summed over axes
    h += kron(id4, -0.25 * (aa * pa + pa * aa));
    if (!hermitize) {
      const MatrixXcd ea = diagonal_field(g, [&, a](const Vec3& x) { return gd.efield(x)[a]; });
      h += std::complex<double>(0.0, -0.5 * c * hbar) * kron(to_eigen(alpha_matrix(a)), ea);
    }
  }
  h += kron(id4, diagonal_field(g, [&](const Vec3& x) { return m * gd.a0(x); }));
  return h;
}

/// Fraction of an eigenvector's weight in the upper 2-spinor blocks.
inline double upper_component_weight(const VectorXcd& v, std::size_t npts) {
  double up = 0.0, total = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double w = std::norm(v(i));
    total += w;
    if (static_cast<std::size_t>(i) < 2 * npts) up += w;
  }
  return total > 0.0 ? up / total : 0.0;
}

/// Ascending eigenvalues of the upper-component-dominated sector.
inline std::vector<double> upper_dominated_eigenvalues(const MatrixXcd& dirac_h, std::size_t npts,
                                                       double min_weight = 0.5) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(dirac_h);
  if (es.info() != Eigen::Success) throw std::runtime_error("upper_dominated_eigenvalues: eigensolver failed");
  std::vector<double> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (upper_component_weight(es.eigenvectors().col(i), npts) > min_weight)
      out.push_back(es.eigenvalues()(i));
  std::sort(out.begin(), out.end());
  return out;
}

/// The Pauli limit: H5 on 2-spinor states with the Darwin-type constant
/// reported separately (it is subtracted, not included in the operator).
/// The metric must be the rotating-frame one for the given setup.
struct PauliReduction {
  RotatingHamiltonian hamiltonian;  // include_spin and include_spin_orbit set
  double darwin_constant;
};

inline PauliReduction pauli_reduction(const RotationSetup& su, const WeakMetric& metric,
                                      const GridSpec& g) {
  // verify the metric is the rotating one for this setup
  const WeakMetric reference = rotating_metric(su);
  const std::size_t npts = g.num_points();
  const std::size_t step = std::max<std::size_t>(1, npts / 16);
  for (std::size_t f = 0; f < npts; f += step) {
    const Vec3 x = g.point(f);
    const Mat4d a = metric.eval(x), b = reference.eval(x);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (std::abs(a[i][j] - b[i][j]) > 1e-12)
          throw std::invalid_argument("pauli_reduction: metric is not the rotating-frame metric of this setup");
  }
  return PauliReduction{RotatingHamiltonian{su, true, true}, effective_fields(su).darwin};
}

/// Dense matrix of the Pauli reduction (2N x 2N).
inline MatrixXcd pauli_matrix(const PauliReduction& r, const GridSpec& g, bool include_efield = true) {
  return h5_matrix(r.hamiltonian.setup, g, include_efield);
}

}  // namespace rotqm
