#pragma once

// Expectation values by grid quadrature: position pointwise, momentum and
// kinetic energy spectrally. An optional constant momentum shift supports the
// operator picture of the Galilei boost, where p' = p - mV acts on an
// untouched wavefunction.

#include <complex>
#include <vector>
#include <cmath>

#include "rotqm/spectral.hpp"
#include "rotqm/wavestate.hpp"

namespace rotqm {

/// <x> per axis; unused axes report 0.
inline Vec3 position_expectation(const WaveState& s) {
  const GridSpec& g = s.grid();
  const std::size_t npts = g.num_points();
  double w2 = 0.0;
  Vec3 acc{};
  for (int c = 0; c < s.components(); ++c) {
    const auto* d = s.component_data(c);
    for (std::size_t f = 0; f < npts; ++f) {
      const double w = quadrature_weight(g, f) * std::norm(d[f]);
      w2 += w;
      acc += w * g.point(f);
    }
  }
  return acc / w2;
}

namespace detail {

/// Applies op(k_vector, |psi_hat|^2) over all spectral modes of all components.
template <typename Op>
void for_each_mode(const WaveState& s, Op&& op) {
  const GridSpec& g = s.grid();
  const std::size_t npts = g.num_points();
  std::vector<std::complex<double>> buf(npts);
  for (int c = 0; c < s.components(); ++c) {
    const auto* d = s.component_data(c);
    std::copy(d, d + npts, buf.begin());
    transform_nd(buf.data(), g, true);
    for (std::size_t f = 0; f < npts; ++f) {
      const auto idx = g.unflatten(f);
      Vec3 k{};
      if (g.dim > 0) k.x = g.wavenumber(0, idx[0]);
      if (g.dim > 1) k.y = g.wavenumber(1, idx[1]);
      if (g.dim > 2) k.z = g.wavenumber(2, idx[2]);
      op(k, std::norm(buf[f]));
    }
  }
}

}  // namespace detail

/// <p + shift> per axis (spectral). Pass shift = -mV for the boosted
/// momentum operator.
inline Vec3 momentum_expectation(const WaveState& s, double hbar, const Vec3& shift = {}) {
  double total = 0.0;
  Vec3 acc{};
  detail::for_each_mode(s, [&](const Vec3& k, double w) {
    total += w;
    acc += w * (hbar * k + shift);
  });
  return acc / total;
}

/// <(p + shift)^2> / 2m (spectral).
inline double kinetic_energy_expectation(const WaveState& s, double mass, double hbar,
                                         const Vec3& shift = {}) {
  double total = 0.0;
  double acc = 0.0;
  detail::for_each_mode(s, [&](const Vec3& k, double w) {
    total += w;
    acc += w * norm_squared(hbar * k + shift);
  });
  return acc / total / (2.0 * mass);
}

}  // namespace rotqm
