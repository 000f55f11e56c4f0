#pragma once

// Inertial gauge field (A_0, A): the 4-potential that minimal coupling
// p^mu -> p^mu - m A^mu turns into frame effects. Two instances appear:
// the constant field (-V^2/2, V) of a uniform boost, and the rotating-frame
// field (-(Omega x r)^2/2, Omega x r).

#include <functional>

#include "rotqm/vec3.hpp"

namespace rotqm {

struct GaugeField {
  std::function<double(const Vec3&)> a0;   // scalar potential, velocity^2 units
  std::function<Vec3(const Vec3&)> avec;   // vector potential, velocity units

  /// Rotating-frame field: A(x) = Omega x r, A0(x) = -|Omega x r|^2 / 2.
  /// A vanishes at the origin and A0 = -|A|^2/2 everywhere (exact pair).
  static GaugeField rotating(const Vec3& omega) {
    return {
        [omega](const Vec3& r) { return -0.5 * norm_squared(cross(omega, r)); },
        [omega](const Vec3& r) { return cross(omega, r); },
    };
  }

  /// Constant field of a uniform boost with velocity V: (-V^2/2, V).
  static GaugeField uniform_boost(const Vec3& v) {
    const double a0 = -0.5 * norm_squared(v);
    return {
        [a0](const Vec3&) { return a0; },
        [v](const Vec3&) { return v; },
    };
  }
};

}  // namespace rotqm
