#pragma once

// Split-step propagator for the rotating-frame Hamiltonians.
//
// Per step of size dt the evolution factorizes as
//
//   U(dt) = exp(-i dt p^2 / 2m hbar) . exp(+i dt Omega.L / hbar)
//           . exp(+i dt Omega.S / hbar) [. spin-orbit factors]
//
// The first three factors commute exactly ([p^2, L_z] = 0 and spin is a
// separate tensor factor), so for H3/H4 the splitting itself introduces no
// error: the kinetic factor is a diagonal phase in k-space and Omega.L
// generates a rigid rotation of the samples, applied exactly on the periodic
// grid by the three-shear decomposition
//
//   R(phi) = Shear_x(-tan(phi/2)) Shear_y(sin phi) Shear_x(-tan(phi/2)),
//
// each shear being a per-row spectral translation (unitary to rounding).
// With the spin-orbit flag the order-c^-2 corrections are applied as a
// spin-dependent rotation (the S.L piece) plus Strang-split pointwise 2x2
// factors, all unitary.
//
// Supported configurations: any grid with Omega = 0; 1-D grids with any Omega
// (every component of L annihilates functions of x alone, so only the spin
// factor acts); 2-D/3-D grids with Omega along +/- z. Spin-orbit propagation
// is limited to dim <= 2.

#include <complex>
#include <stdexcept>
#include <vector>
#include <cmath>

#include "rotqm/hamiltonian.hpp"
#include "rotqm/mat2.hpp"
#include "rotqm/spectral.hpp"
#include "rotqm/wavestate.hpp"

namespace rotqm {

namespace detail {

/// Spectral translation along `axis`: psi(.., x_axis, ..) -> psi(.., x_axis + delta(line), ..)
/// where delta depends on the transverse point through `shift_of_line`.
/// Periodic (circular) translation, exact for band-limited data.
template <typename ShiftFn>
void shear_axis(WaveState& s, int axis, const Fft& fft, ShiftFn&& shift_of_line) {
  const GridSpec& g = s.grid();
  const std::size_t n = g.axes[axis].n;
  const std::size_t stride = axis_stride(g, axis);
  const std::size_t block = stride * n;
  const std::size_t npts = g.num_points();
  std::vector<std::complex<double>> line(n);
  std::vector<double> k(n);
  for (std::size_t j = 0; j < n; ++j) k[j] = g.wavenumber(axis, j);
  for (int c = 0; c < s.components(); ++c) {
    auto* data = s.component_data(c);
    for (std::size_t outer = 0; outer < npts; outer += block) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        auto* base = data + outer + inner;
        const std::size_t line_flat = outer + inner;  // flat index of the j=0 element
        const double delta = shift_of_line(line_flat);
        if (delta == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) line[j] = base[j * stride];
        fft.forward(line.data());
        for (std::size_t j = 0; j < n; ++j) line[j] *= std::polar(1.0, k[j] * delta);
        fft.inverse(line.data());
        for (std::size_t j = 0; j < n; ++j) base[j * stride] = line[j];
      }
    }
  }
}

}  // namespace detail

/// Rotate the sampled wavefunction about the z axis through the coordinate
/// origin: psi(x) -> psi(R(angle) x), with R(angle) the counterclockwise
/// rotation of the coordinates. This is exp(+i angle L_z / hbar). Requires a
/// 2-D or 3-D grid; exact for band-limited periodic data away from the
/// domain corners.
inline void apply_rotation_about_z(WaveState& s, double angle) {
  const GridSpec& g = s.grid();
  if (g.dim < 2) throw std::invalid_argument("apply_rotation_about_z: grid must be at least 2-D");
  if (angle == 0.0) return;
  if (std::abs(angle) > 1.5)
    throw std::invalid_argument("apply_rotation_about_z: angle too large for the shear decomposition; split it");
  const double a = -std::tan(angle / 2.0);
  const double b = std::sin(angle);
  Fft fft_x(g.axes[0].n), fft_y(g.axes[1].n);
  // x <- x + a*y
  detail::shear_axis(s, 0, fft_x, [&](std::size_t f) { return a * g.point(f).y; });
  // y <- y + b*x
  detail::shear_axis(s, 1, fft_y, [&](std::size_t f) { return b * g.point(f).x; });
  detail::shear_axis(s, 0, fft_x, [&](std::size_t f) { return a * g.point(f).y; });
}

namespace detail {

struct StepPlan {
  // configuration
  bool rotate = false;          // apply the Omega.L factor
  double angle = 0.0;           // rotation angle per step (signed, about z)
  bool spin = false;
  Mat2c spin_factor;            // exp(+i dt Omega.sigma / 2)
  bool spin_orbit = false;
  double sl_angle_up = 0.0;     // spin-dependent rotation angle (S.L factor), sigma_z = +1
  std::vector<Mat2c> so_point;  // Strang half-step pointwise factors
  std::vector<std::complex<double>> kinetic_phase;  // per grid point in k-space
};

inline StepPlan make_plan(const WaveState& state, const RotatingHamiltonian& h, double dt,
                          Diagnostics* diag) {
  const GridSpec& g = state.grid();
  const RotationSetup& su = h.setup;
  StepPlan plan;

  const double omega_norm = norm(su.omega);
  const bool axis_z = omega_norm == 0.0 || (su.omega.x == 0.0 && su.omega.y == 0.0);
  if (g.dim >= 2 && omega_norm > 0.0 && !axis_z)
    throw std::invalid_argument("propagate: on 2-D/3-D grids Omega must point along the z axis");

  plan.rotate = g.dim >= 2 && su.omega.z != 0.0;
  plan.angle = su.omega.z * dt;
  if (diag && std::abs(plan.angle) > 0.5)
    diag->warn("rotation angle per step exceeds 0.5 rad; shear accuracy degrades (reduce dt)");

  if (h.include_spin) {
    if (state.components() != 2) throw std::invalid_argument("propagate: spin coupling needs a 2-spinor state");
    plan.spin = true;
    plan.spin_factor = pauli_exponential((dt / 2.0) * su.omega);
  }

  // kinetic phases exp(-i dt hbar k^2 / 2m)
  const std::size_t npts = g.num_points();
  plan.kinetic_phase.resize(npts);
  for (std::size_t f = 0; f < npts; ++f) {
    const auto idx = g.unflatten(f);
    double k2 = 0.0;
    for (int a = 0; a < g.dim; ++a) {
      const double k = g.wavenumber(a, idx[a]);
      k2 += k * k;
    }
    plan.kinetic_phase[f] = std::polar(1.0, -dt * su.hbar * k2 / (2.0 * su.mass));
  }

  if (h.include_spin_orbit) {
    if (state.components() != 2) throw std::invalid_argument("propagate: spin-orbit coupling needs a 2-spinor state");
    if (g.dim > 2) throw std::invalid_argument("propagate: spin-orbit propagation supports 1-D and 2-D grids");
    plan.spin_orbit = true;
    const double c2 = su.c * su.c;
    // S.L correction: rotation of each sigma_z component by
    //   +/- dt hbar Omega^2 / (2 m c^2)   (2-D only; L vanishes on 1-D grids)
    plan.sl_angle_up = (g.dim == 2) ? dt * su.hbar * norm_squared(su.omega) / (2.0 * su.mass * c2) : 0.0;
    // pointwise factors exp(-i dt V_so / 2 hbar), V_so = A.(S x E) + (S x E)^2 / 2m
    plan.so_point.resize(npts);
    double max_phase = 0.0;
    const Vec3 omega_hat = normalized(su.omega);
    for (std::size_t f = 0; f < npts; ++f) {
      const Vec3 x = g.point(f);
      const Vec3 avec = cross(su.omega, x);
      // E = Omega^2 x_perp / c^2, x_perp orthogonal to Omega
      const Vec3 x_perp = x - dot(omega_hat, x) * omega_hat;
      const Vec3 efield = (norm_squared(su.omega) / c2) * x_perp;
      const Vec3 sxe_vec = (su.hbar / 2.0) * cross(efield, avec);  // direction of (E x A).sigma
      const double scalar = su.hbar * su.hbar * norm_squared(efield) / (4.0 * su.mass);
      // V_so = (hbar/2) (E x A).sigma + hbar^2 E^2 / 4m
      const Vec3 arg = (-dt / (2.0 * su.hbar)) * sxe_vec;
      Mat2c m = pauli_exponential(arg);
      const double sphase = -dt * scalar / (2.0 * su.hbar);
      m = std::polar(1.0, sphase) * m;
      plan.so_point[f] = m;
      max_phase = std::max(max_phase, norm(arg) + std::abs(sphase));
    }
    if (diag && max_phase > 1.0)
      diag->warn("spin-orbit pointwise phase per half-step exceeds 1 rad; reduce dt");
  }
  return plan;
}

inline void apply_kinetic(WaveState& s, const StepPlan& plan) {
  const GridSpec& g = s.grid();
  const std::size_t npts = g.num_points();
  for (int c = 0; c < s.components(); ++c) {
    auto* d = s.component_data(c);
    transform_nd(d, g, true);
    for (std::size_t f = 0; f < npts; ++f) d[f] *= plan.kinetic_phase[f];
    transform_nd(d, g, false);
  }
}

inline void apply_spin(WaveState& s, const Mat2c& u) {
  const std::size_t npts = s.grid().num_points();
  auto* up = s.component_data(0);
  auto* dn = s.component_data(1);
  for (std::size_t f = 0; f < npts; ++f) {
    const auto a = up[f];
    const auto b = dn[f];
    up[f] = u(0, 0) * a + u(0, 1) * b;
    dn[f] = u(1, 0) * a + u(1, 1) * b;
  }
}

inline void apply_pointwise_2x2(WaveState& s, const std::vector<Mat2c>& m) {
  const std::size_t npts = s.grid().num_points();
  auto* up = s.component_data(0);
  auto* dn = s.component_data(1);
  for (std::size_t f = 0; f < npts; ++f) {
    const auto a = up[f];
    const auto b = dn[f];
    const Mat2c& u = m[f];
    up[f] = u(0, 0) * a + u(0, 1) * b;
    dn[f] = u(1, 0) * a + u(1, 1) * b;
  }
}

/// Rotate one component of the state about z (component-wise view).
inline void rotate_component(WaveState& s, int comp, double angle) {
  // wrap the single component into a scalar view by rotating in place
  const GridSpec& g = s.grid();
  WaveState view(g, 1, s.time());
  const std::size_t npts = g.num_points();
  std::copy(s.component_data(comp), s.component_data(comp) + npts, view.component_data(0));
  apply_rotation_about_z(view, angle);
  std::copy(view.component_data(0), view.component_data(0) + npts, s.component_data(comp));
}

inline void check_boundary(const WaveState& s, Diagnostics* diag) {
  if (!diag || diag->boundary_hit) return;
  const GridSpec& g = s.grid();
  const std::size_t npts = g.num_points();
  double edge = 0.0, total = 0.0;
  for (int c = 0; c < s.components(); ++c) {
    const auto* d = s.component_data(c);
    for (std::size_t f = 0; f < npts; ++f) {
      const double w = std::norm(d[f]);
      total += w;
      const auto idx = g.unflatten(f);
      for (int a = 0; a < g.dim; ++a) {
        if (idx[a] < 2 || idx[a] + 2 >= g.axes[a].n) {
          edge += w;
          break;
        }
      }
    }
  }
  if (total > 0.0 && edge / total > 1e-5) {
    diag->boundary_hit = true;
    diag->warn("wavepacket reached the grid boundary; periodic wraparound contaminates the result");
  }
}

}  // namespace detail

/// Evolve `state` for `steps` steps of size dt under the rotating-frame
/// Hamiltonian. Unitary to rounding for H3/H4; Strang splitting error only in
/// the order-c^-2 spin-orbit corrections. steps = 0 returns the input.
inline WaveState propagate(WaveState state, const RotatingHamiltonian& h, double dt, int steps,
                           Diagnostics* diag = nullptr) {
  if (steps < 0) throw std::invalid_argument("propagate: steps must be >= 0");
  if (steps == 0) return state;
  check_nonrelativistic(h, state.grid(), diag);
  const detail::StepPlan plan = detail::make_plan(state, h, dt, diag);

  for (int step = 0; step < steps; ++step) {
    if (plan.spin_orbit) detail::apply_pointwise_2x2(state, plan.so_point);
    detail::apply_kinetic(state, plan);
    if (plan.rotate) apply_rotation_about_z(state, plan.angle);
    if (plan.spin_orbit && plan.sl_angle_up != 0.0) {
      detail::rotate_component(state, 0, plan.sl_angle_up);
      detail::rotate_component(state, 1, -plan.sl_angle_up);
    }
    if (plan.spin) detail::apply_spin(state, plan.spin_factor);
    if (plan.spin_orbit) detail::apply_pointwise_2x2(state, plan.so_point);
    state.set_time(state.time() + dt);
  }
  detail::check_boundary(state, diag);
  return state;
}

}  // namespace rotqm
