#pragma once

// Semiclassical trajectory of a propagated packet. The mean position obeys
//
//   m d2<x>/dt2 = 2m (d<x>/dt) x Omega + m Omega x (<x> x Omega),
//
// i.e. Coriolis plus centrifugal force; for the quadratic rotating-frame
// potential this is exact in the continuum, so residuals measure
// discretization. The recorded velocity is the kinetic one,
// v = (<p> - m Omega x <x> - <S x E>)/m.

#include <vector>

#include "rotqm/observables.hpp"
#include "rotqm/propagate.hpp"

namespace rotqm {

struct EhrenfestTrajectory {
  std::vector<double> times;
  std::vector<Vec3> mean_position;
  std::vector<Vec3> mean_velocity;
  bool boundary_hit = false;  // packet reached the grid edge; samples invalid
};

namespace detail {

inline Vec3 spin_efield_expectation(const WaveState& s, const RotationSetup& su) {
  // <S x E> with E = Omega^2 x_perp / c^2
  const GridSpec& g = s.grid();
  const std::size_t npts = g.num_points();
  const Vec3 omega_hat = normalized(su.omega);
  const double pref = norm_squared(su.omega) / (su.c * su.c);
  double w2 = 0.0;
  Vec3 acc{};
  const auto* up = s.component_data(0);
  const auto* dn = s.component_data(1);
  for (std::size_t f = 0; f < npts; ++f) {
    const Vec3 x = g.point(f);
    const Vec3 efield = pref * (x - dot(omega_hat, x) * omega_hat);
    // <sigma> at this point
    const cd a = up[f], b = dn[f];
    const double w = std::norm(a) + std::norm(b);
    const cd ab = std::conj(a) * b;
    const Vec3 sigma_mean{2.0 * ab.real(), -2.0 * ab.imag(), std::norm(a) - std::norm(b)};
    acc += cross((su.hbar / 2.0) * sigma_mean, efield);
    w2 += w;
  }
  return acc / w2;
}

}  // namespace detail

/// Record <x>(t) and the kinetic velocity while propagating. Samples are taken
/// every `sample_every` steps, including the initial state.
inline EhrenfestTrajectory ehrenfest_trajectory(WaveState state, const RotatingHamiltonian& h, double dt,
                                                int steps, int sample_every = 1,
                                                Diagnostics* diag = nullptr) {
  if (sample_every < 1) throw std::invalid_argument("ehrenfest_trajectory: sample_every must be >= 1");
  Diagnostics local;
  Diagnostics* d = diag ? diag : &local;
  EhrenfestTrajectory traj;
  const RotationSetup& su = h.setup;

  auto record = [&](const WaveState& s) {
    const Vec3 xm = position_expectation(s);
    const Vec3 pm = momentum_expectation(s, su.hbar);
    Vec3 v = (pm - su.mass * cross(su.omega, xm)) / su.mass;
    if (h.include_spin_orbit && s.components() == 2)
      v -= detail::spin_efield_expectation(s, su) / su.mass;
    traj.times.push_back(s.time());
    traj.mean_position.push_back(xm);
    traj.mean_velocity.push_back(v);
  };

  record(state);
  int done = 0;
  while (done < steps) {
    const int chunk = std::min(sample_every, steps - done);
    state = propagate(std::move(state), h, dt, chunk, d);
    done += chunk;
    detail::check_boundary(state, d);
    record(state);
  }
  traj.boundary_hit = d->boundary_hit;
  return traj;
}

}  // namespace rotqm
