#pragma once

// Physical context of a rotating-frame computation: particle mass, hbar, c
// and the constant angular velocity of the frame relative to the inertial one.

#include <stdexcept>
#include <cmath>

#include "rotqm/vec3.hpp"

namespace rotqm {

struct RotationSetup {
  double mass;
  double hbar;
  double c;
  Vec3 omega;  // angular velocity of the rotating frame, constant in time

  RotationSetup(double mass_, double hbar_, double c_, const Vec3& omega_)
      : mass(mass_), hbar(hbar_), c(c_), omega(omega_) {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("RotationSetup: mass must be positive and finite");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw std::invalid_argument("RotationSetup: hbar must be positive and finite");
    if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("RotationSetup: c must be positive and finite");
    if (!std::isfinite(omega.x) || !std::isfinite(omega.y) || !std::isfinite(omega.z))
      throw std::invalid_argument("RotationSetup: omega must be finite");
  }

  /// Natural units, hbar = c = 1.
  static RotationSetup natural(double mass, const Vec3& omega) {
    return RotationSetup(mass, 1.0, 1.0, omega);
  }
};

}  // namespace rotqm
