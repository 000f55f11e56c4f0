#pragma once

// Rotating-frame Hamiltonians:
//
//   H3 = (p - m Omega x r)^2 / 2m - m (Omega x r)^2 / 2
//   H4 = H3 - Omega.S                        (spin-rotation coupling)
//   H5 = (p - m A - S x E)^2 / 2m + m A0 - Omega.S   (with E = Omega^2 r_perp / c^2)
//
// Expanding the square, H3 equals p^2/2m - Omega.L exactly: the gauge and
// centrifugal potentials cancel and only the rotation generator remains.
// That identity is what the split-step propagator exploits.

#include <string>
#include <vector>

#include "rotqm/gauge_field.hpp"
#include "rotqm/grid.hpp"
#include "rotqm/setup.hpp"

namespace rotqm {

/// Warning channel for propagation and realization routines.
struct Diagnostics {
  std::vector<std::string> warnings;
  bool boundary_hit = false;

  void warn(std::string msg) { warnings.push_back(std::move(msg)); }
};

struct RotatingHamiltonian {
  RotationSetup setup;
  bool include_spin = false;
  bool include_spin_orbit = false;  // adds the S x E term of the Pauli limit

  GaugeField field() const { return GaugeField::rotating(setup.omega); }
};

/// Warn when |Omega x r| approaches c anywhere on the grid (the derivation is
/// nonrelativistic in the frame velocity). Warns, never fails.
inline void check_nonrelativistic(const RotatingHamiltonian& h, const GridSpec& grid, Diagnostics* diag) {
  if (!diag) return;
  double r2max = 0.0;
  // corners bound |r| on a rectangular box
  const std::size_t corners = std::size_t(1) << grid.dim;
  for (std::size_t cbit = 0; cbit < corners; ++cbit) {
    Vec3 p{};
    for (int a = 0; a < grid.dim; ++a) {
      const std::size_t i = (cbit >> a) & 1 ? grid.axes[a].n - 1 : 0;
      const double v = grid.coord(a, i);
      if (a == 0) p.x = v;
      if (a == 1) p.y = v;
      if (a == 2) p.z = v;
    }
    r2max = std::max(r2max, norm_squared(cross(h.setup.omega, p)));
  }
  if (std::sqrt(r2max) > 0.1 * h.setup.c)
    diag->warn("frame velocity |Omega x r| exceeds 0.1 c at the grid edge; nonrelativistic treatment degrades");
}

inline RotatingHamiltonian build_hamiltonian(const RotationSetup& setup, bool include_spin = false,
                                             bool include_spin_orbit = false) {
  return RotatingHamiltonian{setup, include_spin, include_spin_orbit};
}

}  // namespace rotqm
