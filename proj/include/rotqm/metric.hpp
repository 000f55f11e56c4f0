#pragma once

// Weak-field metric machinery: g_mn = eta_mn + h_mn with the rotating-frame
// instance
//
//   h_00 = -(Omega x r)^2 / c^2,  h_0i = -(Omega x r)_i / c,  h_ij = 0,
//
// first-order vierbein e^m_a = d^m_a - h^m_a / 2 (inverse with +), Ricci
// rotation coefficients Gamma_{ab mu} = (d_a h_{mu b} - d_b h_{mu a}) / 2,
// the inertial analog of the electric field E = -(1/2) grad h_00
// = Omega^2 x_perp / c^2, and the restricted weak-field gauge
// transformations that act on G^mu like electromagnetic gauge changes.
//
// All fields are static (time-independent); spatial derivatives come from
// analytic closed forms when supplied, otherwise from central differences.

#include <array>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <cmath>

#include "rotqm/gamma.hpp"
#include "rotqm/phases.hpp"
#include "rotqm/setup.hpp"
#include "rotqm/vec3.hpp"

namespace rotqm {

using Mat4d = std::array<std::array<double, 4>, 4>;

inline Mat4d mat4d_zero() { return Mat4d{}; }

/// Symmetric perturbation h_mn(x), static, with optional analytic spatial
/// derivatives dh[axis](x) = d h / d x_axis. Indices: 0 = ct, 1..3 = x,y,z.
struct WeakMetric {
  std::function<Mat4d(const Vec3&)> h;
  std::function<Mat4d(const Vec3&, int axis)> dh;  // may be empty: central differences
  double fd_spacing = 1e-5;

  Mat4d eval(const Vec3& x) const { return h(x); }

  /// d h / d x_axis, axis in {0,1,2} for x,y,z (time derivatives vanish).
  Mat4d derivative(const Vec3& x, int axis) const {
    if (dh) return dh(x, axis);
    Vec3 xp = x, xm = x;
    const double d = fd_spacing;
    if (axis == 0) { xp.x += d; xm.x -= d; }
    if (axis == 1) { xp.y += d; xm.y -= d; }
    if (axis == 2) { xp.z += d; xm.z -= d; }
    const Mat4d hp = h(xp), hm = h(xm);
    Mat4d r{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[i][j] = (hp[i][j] - hm[i][j]) / (2.0 * d);
    return r;
  }

  double max_abs(const Vec3& x) const {
    const Mat4d m = h(x);
    double v = 0.0;
    for (const auto& row : m)
      for (double e : row) v = std::max(v, std::abs(e));
    return v;
  }

  double frobenius(const Vec3& x) const {
    const Mat4d m = h(x);
    double s = 0.0;
    for (const auto& row : m)
      for (double e : row) s += e * e;
    return std::sqrt(s);
  }
};

/// The exact rotating-frame metric (not series-truncated in these coordinates).
inline WeakMetric rotating_metric(const RotationSetup& setup) {
  const Vec3 omega = setup.omega;
  const double c = setup.c;
  WeakMetric m;
  m.h = [omega, c](const Vec3& x) {
    Mat4d h{};
    const Vec3 a = cross(omega, x);
    h[0][0] = -norm_squared(a) / (c * c);
    for (int i = 0; i < 3; ++i) {
      h[0][i + 1] = -a[i] / c;
      h[i + 1][0] = -a[i] / c;
    }
    return h;
  };
  m.dh = [omega, c](const Vec3& x, int axis) {
    Mat4d d{};
    const Vec3 a = cross(omega, x);
    Vec3 e{};
    if (axis == 0) e.x = 1.0;
    if (axis == 1) e.y = 1.0;
    if (axis == 2) e.z = 1.0;
    const Vec3 da = cross(omega, e);  // d(Omega x r)/dx_axis
    d[0][0] = -2.0 * dot(a, da) / (c * c);
    for (int i = 0; i < 3; ++i) {
      d[0][i + 1] = -da[i] / c;
      d[i + 1][0] = -da[i] / c;
    }
    return d;
  };
  return m;
}

// ---------------------------------------------------------------------------
// Vierbein
// ---------------------------------------------------------------------------

/// Raise the first index of h with eta: (h^m)_a = eta^mm h_{m a}.
inline Mat4d raise_first_index(const Mat4d& h) {
  Mat4d r{};
  for (int m = 0; m < 4; ++m)
    for (int a = 0; a < 4; ++a) r[m][a] = eta(m, m) * h[m][a];
  return r;
}

struct Vierbein {
  /// e^m_a = d^m_a - h^m_a / 2 (row m, column a)
  std::function<Mat4d(const Vec3&)> e_inv;
  /// e^a_m = d^a_m + h^a_m / 2 (row a, column m)
  std::function<Mat4d(const Vec3&)> e;
};

/// First-order vierbein pair; evaluation throws when the weak-field bound
/// max|h| < 1 is violated, naming the offending point.
inline Vierbein build_vierbein(const WeakMetric& metric) {
  auto guard = [metric](const Vec3& x) {
    const double m = metric.max_abs(x);
    if (!(m < 1.0)) {
      std::ostringstream os;
      os << "build_vierbein: weak-field bound violated, max|h| = " << m << " at point " << x;
      throw std::domain_error(os.str());
    }
  };
  Vierbein v;
  v.e_inv = [metric, guard](const Vec3& x) {
    guard(x);
    const Mat4d hr = raise_first_index(metric.eval(x));
    Mat4d r{};
    for (int m = 0; m < 4; ++m)
      for (int a = 0; a < 4; ++a) r[m][a] = (m == a ? 1.0 : 0.0) - 0.5 * hr[m][a];
    return r;
  };
  v.e = [metric, guard](const Vec3& x) {
    guard(x);
    const Mat4d hr = raise_first_index(metric.eval(x));
    Mat4d r{};
    for (int a = 0; a < 4; ++a)
      for (int m = 0; m < 4; ++m) r[a][m] = (a == m ? 1.0 : 0.0) + 0.5 * hr[a][m];
    return r;
  };
  return v;
}

/// Pointwise reconstruction residual ||eta_ab e^a_m e^b_n - g_mn||_F. The
/// first-order vierbein leaves exactly (1/4) h eta h, so the residual is
/// bounded by ||h||_F^2 / 4.
inline double vierbein_reconstruction_residual(const Vierbein& v, const WeakMetric& metric, const Vec3& x) {
  const Mat4d e = v.e(x);
  const Mat4d h = metric.eval(x);
  double sum = 0.0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double g = 0.0;
      for (int a = 0; a < 4; ++a) g += eta(a, a) * e[a][m] * e[a][n];
      const double target = eta(m, n) + h[m][n];
      sum += (g - target) * (g - target);
    }
  return std::sqrt(sum);
}

// ---------------------------------------------------------------------------
// Spin connection (Ricci rotation coefficients)
// ---------------------------------------------------------------------------

/// Gamma_{ab mu}, antisymmetric in (a, b); for static h only spatial
/// derivatives contribute (d_0 h = 0).
struct SpinConnection {
  std::function<double(const Vec3&, int a, int b, int mu)> gamma;
};

inline SpinConnection spin_connection(const WeakMetric& metric) {
  SpinConnection s;
  s.gamma = [metric](const Vec3& x, int a, int b, int mu) {
    // d_a h_{mu b}: flat derivative index, = 0 for a = 0 (static fields)
    auto dh = [&](int idx, int r, int c) -> double {
      if (idx == 0) return 0.0;
      return metric.derivative(x, idx - 1)[r][c];
    };
    return 0.5 * (dh(a, mu, b) - dh(b, mu, a));
  };
  return s;
}

// ---------------------------------------------------------------------------
// Effective fields of the low-energy limit
// ---------------------------------------------------------------------------

/// E(x) = -(1/2) grad h_00 = Omega^2 x_perp / c^2 (1/length units) and the
/// constant Darwin-type energy shift that is subtracted from the Pauli
/// Hamiltonian.
struct EffectiveFields {
  std::function<Vec3(const Vec3&)> efield;
  double darwin;
};

inline EffectiveFields effective_fields(const RotationSetup& setup) {
  const Vec3 omega = setup.omega;
  const double c2 = setup.c * setup.c;
  EffectiveFields f;
  const Vec3 omega_hat = normalized(omega);
  f.efield = [omega, omega_hat, c2](const Vec3& x) {
    const Vec3 x_perp = x - dot(omega_hat, x) * omega_hat;
    return (norm_squared(omega) / c2) * x_perp;
  };
  f.darwin = -3.0 * setup.hbar * setup.hbar * norm_squared(omega) / (8.0 * setup.mass * c2);
  return f;
}

// ---------------------------------------------------------------------------
// Weak-field potential and gauge transformations
// ---------------------------------------------------------------------------

/// G^mu = (h_00 / 2, -h_0i), the potential minimally coupled in the
/// weak-field Schroedinger equation.
inline WeakPotential extract_weak_potential(const WeakMetric& metric) {
  WeakPotential g;
  g.g0 = [metric](const Vec3& x) { return 0.5 * metric.eval(x)[0][0]; };
  g.gvec = [metric](const Vec3& x) {
    const Mat4d h = metric.eval(x);
    return Vec3{-h[0][1], -h[0][2], -h[0][3]};
  };
  return g;
}

/// Infinitesimal coordinate change x^m -> x^m + xi^m restricted to the class
/// that keeps the apparatus 4-velocity proportional to delta^m_0: xi^i must be
/// time-independent. xi0 is the time component (length units, may carry a
/// constant slope in x^0 = ct); xi_dot, when set, represents d xi^i / d x^0
/// and is rejected -- it exists so the necessity of the restriction can be
/// demonstrated by the phase machinery.
struct GaugeVector {
  std::function<double(const Vec3&)> xi0;          // xi^0(x)
  std::function<Vec3(const Vec3&)> grad_xi0;       // analytic gradient of xi0
  double xi0_ct_slope = 0.0;                       // d xi^0 / d x^0 (constant)
  std::function<Vec3(const Vec3&)> xi_spatial;     // xi^i(x), static (optional)
  std::function<Mat4d(const Vec3&)> xi_jacobian;   // rows a=1..3: d xi^a / d x^b in [a][b] (optional)
  std::function<Vec3(const Vec3&)> xi_dot;         // d xi^i / d x^0; must be unset/zero
};

struct GaugeShiftReport {
  double max_g_shift_deviation = 0.0;  // |Delta G^mu + d^mu xi0| over the samples
  std::size_t samples = 0;
};

/// h_mn -> h_mn - xi_{m,n} - xi_{n,m} under the restricted transformation;
/// verifies at the sample points that the potential shifts by
/// G^mu -> G^mu - d^mu xi0, exactly as an electromagnetic gauge change.
inline std::pair<WeakMetric, GaugeShiftReport> gauge_transform_weakfield(
    const WeakMetric& metric, const GaugeVector& xi, const std::vector<Vec3>& sample_points = {}) {
  if (xi.xi_dot)
    throw std::invalid_argument(
        "gauge_transform_weakfield: xi^i must be time-independent (xi^i_,0 = 0); the transformation must "
        "keep the apparatus rest frame, t^mu proportional to delta^mu_0");
  if (!xi.xi0) throw std::invalid_argument("gauge_transform_weakfield: xi0 is required");
  if (!xi.grad_xi0) throw std::invalid_argument("gauge_transform_weakfield: analytic grad_xi0 is required");
  if (xi.xi_spatial && !xi.xi_jacobian)
    throw std::invalid_argument("gauge_transform_weakfield: xi_spatial needs its jacobian");

  const WeakMetric base = metric;
  const GaugeVector x = xi;
  WeakMetric out;
  out.fd_spacing = metric.fd_spacing;
  out.h = [base, x](const Vec3& p) {
    Mat4d h = base.eval(p);
    // xi_lowered: xi_0 = xi^0, xi_i = -xi^i
    const Vec3 g0 = x.grad_xi0(p);
    // h_00 -= 2 d_0 xi_0
    h[0][0] -= 2.0 * x.xi0_ct_slope;
    // h_0i -= d_i xi_0 + d_0 xi_i ; the latter vanishes (restriction)
    for (int i = 0; i < 3; ++i) {
      h[0][i + 1] -= g0[i];
      h[i + 1][0] -= g0[i];
    }
    if (x.xi_spatial) {
      // h_ik -= xi_{i,k} + xi_{k,i} with xi_i = -xi^i
      const Mat4d j = x.xi_jacobian(p);  // j[a][b] = d xi^a / d x^b, a,b in 1..3
      for (int i = 1; i < 4; ++i)
        for (int k = 1; k < 4; ++k) h[i][k] += j[i][k] + j[k][i];
    }
    return h;
  };

  GaugeShiftReport report;
  const WeakPotential before = extract_weak_potential(metric);
  const WeakPotential after = extract_weak_potential(out);
  for (const Vec3& p : sample_points) {
    // expected: Delta G^0 = -d^0 xi0 = -xi0_ct_slope, Delta G^i = -d^i xi0 = +d_i xi0
    const double d0 = (after.g0(p) - before.g0(p)) + x.xi0_ct_slope;
    const Vec3 dv = (after.gvec(p) - before.gvec(p)) - x.grad_xi0(p);
    report.max_g_shift_deviation =
        std::max({report.max_g_shift_deviation, std::abs(d0), std::abs(dv.x), std::abs(dv.y), std::abs(dv.z)});
    ++report.samples;
  }
  return {out, report};
}

}  // namespace rotqm
