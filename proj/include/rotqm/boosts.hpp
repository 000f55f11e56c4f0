#pragma once

// Galilei boost between inertial frames, in both equivalent pictures:
//
//  i) acting on the wavefunction,
//       psi'(x', t) = exp((-i m V.x + i m V^2 t / 2)/hbar) psi(x, t),
//     with x' = x - V t and the momentum operator untouched;
//  ii) acting on the momentum operator, p' = p - m V, with the wavefunction
//     transforming as a scalar.
//
// The two are related by a local gauge transformation and must produce the
// same expectation values. The grid shift x' = x - V t is realized by
// relabeling the grid origin, which is exact for any V t.

#include <stdexcept>
#include <utility>

#include "rotqm/gauge_field.hpp"
#include "rotqm/observables.hpp"
#include "rotqm/wavestate.hpp"

namespace rotqm {

struct BoostSpec {
  Vec3 velocity;
  double mass = 1.0;
  double time = 0.0;
};

enum class PictureTag { wavefunction, momentum_operator };

enum class BoostObservable { position, momentum, kinetic_energy };

/// Picture i): multiply by the boost phase at the original coordinates and
/// relabel the grid origin by -V t. Scalar states only; spin under rotation
/// is handled by the spin-rotation and Dirac machinery instead.
inline WaveState boost_wavefunction(const WaveState& state, const BoostSpec& spec, double hbar = 1.0) {
  if (state.components() != 1)
    throw std::invalid_argument("boost_wavefunction: scalar states only; spinor boosts are not part of the Galilei treatment");
  WaveState out = state;
  const GridSpec& g = state.grid();
  const double m = spec.mass;
  const Vec3 v = spec.velocity;
  const double t = spec.time;
  const double v2t_half = 0.5 * m * norm_squared(v) * t / hbar;
  const std::size_t npts = g.num_points();
  for (std::size_t f = 0; f < npts; ++f) {
    const Vec3 x = g.point(f);
    const double phase = -m * dot(v, x) / hbar + v2t_half;
    out.at(0, f) *= std::polar(1.0, phase);
  }
  for (int a = 0; a < g.dim; ++a) out.grid().axes[a].origin -= v[a] * t;
  return out;
}

/// Picture ii): the momentum operator shifts by -mV; the wavefunction is left
/// untouched. Returns the shift.
inline Vec3 boost_operator_momentum(const BoostSpec& spec) { return -spec.mass * spec.velocity; }

/// Nonrelativistic limit of the Lorentz-transformed energy:
/// E' = E - V.p + m V^2 / 2.
inline double transformed_energy(double energy, const Vec3& p, const BoostSpec& spec) {
  return energy - dot(spec.velocity, p) + 0.5 * spec.mass * norm_squared(spec.velocity);
}

/// The boosted Schroedinger equation is the minimally coupled one with the
/// constant gauge field (-V^2/2, V) and coupling constant m.
inline GaugeField minimal_coupling_form(const BoostSpec& spec) {
  return GaugeField::uniform_boost(spec.velocity);
}

/// Expectation value of one observable evaluated in both pictures; the pair
/// must agree within quadrature tolerance. `axis` selects the component of
/// the vector observables.
inline std::pair<double, double> picture_equivalence_check(const WaveState& state, const BoostSpec& spec,
                                                           BoostObservable obs, int axis = 0,
                                                           double hbar = 1.0) {
  if (state.components() != 1)
    throw std::invalid_argument("picture_equivalence_check: scalar states only");

  // picture i): transformed amplitudes on the shifted grid, standard operators
  const WaveState psi_i = boost_wavefunction(state, spec, hbar);
  // picture ii): untouched amplitudes on the shifted grid, shifted momentum
  WaveState psi_ii = state;
  for (int a = 0; a < state.grid().dim; ++a) psi_ii.grid().axes[a].origin -= spec.velocity[a] * spec.time;
  const Vec3 shift = boost_operator_momentum(spec);

  switch (obs) {
    case BoostObservable::position:
      return {position_expectation(psi_i)[axis], position_expectation(psi_ii)[axis]};
    case BoostObservable::momentum:
      return {momentum_expectation(psi_i, hbar)[axis], momentum_expectation(psi_ii, hbar, shift)[axis]};
    case BoostObservable::kinetic_energy:
    default:
      return {kinetic_energy_expectation(psi_i, spec.mass, hbar),
              kinetic_energy_expectation(psi_ii, spec.mass, hbar, shift)};
  }
}

}  // namespace rotqm
