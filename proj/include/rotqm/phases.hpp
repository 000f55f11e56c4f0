#pragma once

// Interferometric phase shifts in the rotating frame.
//
// Sagnac:        dphi = (m/hbar) closed-loop integral of (Omega x r).dl
//                     = 2 m A.Omega / hbar            (Stokes / area form)
// Spin-rotation: Phi = exp(i S.Omega t / hbar)
//                    = I cos(Omega t/2) + i (sigma.Omega_hat) sin(Omega t/2)
// Spin-orbit:    Phi = P[exp((i/hbar) closed-loop integral of dl.(S x E))],
//                E = Omega^2 r_perp / c^2; for a circle centered on the
//                rotation axis this closes to exp(i 2 Omega^2 A.S / hbar c^2),
//                and a spin polarized along the area normal picks up
//                dphi = Omega^2 A / c^2.
// Weak field:    dphi = -(m c/hbar) closed-loop integral of G_mu dx^mu over a
//                spacetime loop, with G^mu = (h_00/2, -h_0i) lowered by the
//                flat metric; for the rotating metric and a purely spatial
//                loop this reproduces the Sagnac phase.
//
// Scalar phases are accumulated unwrapped (fringe counting needs the total);
// the 2 pi-reduced value is reported alongside.

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>
#include <cmath>

#include "rotqm/mat2.hpp"
#include "rotqm/path.hpp"
#include "rotqm/setup.hpp"

namespace rotqm {

enum class PhaseMethod { closed_form, line_integral, ordered_product };

inline const char* to_string(PhaseMethod m) {
  switch (m) {
    case PhaseMethod::closed_form: return "closed_form";
    case PhaseMethod::line_integral: return "line_integral";
    default: return "ordered_product";
  }
}

struct PhaseResult {
  std::optional<double> value;    // radians, unwrapped
  std::optional<Mat2c> op;        // spin-valued phases
  PhaseMethod method = PhaseMethod::closed_form;

  double value_mod_2pi() const {
    if (!value) throw std::logic_error("PhaseResult: no scalar value");
    const double two_pi = 6.283185307179586476925286766559;
    double v = std::fmod(*value, two_pi);
    if (v < 0.0) v += two_pi;
    return v;
  }
};

// ---------------------------------------------------------------------------
// Sagnac
// ---------------------------------------------------------------------------

inline PhaseResult sagnac_phase(const ClosedPath& path, const RotationSetup& setup,
                                PhaseMethod method = PhaseMethod::closed_form) {
  PhaseResult r;
  r.method = method;
  if (method == PhaseMethod::closed_form) {
    r.value = 2.0 * setup.mass * dot(enclosed_area(path), setup.omega) / setup.hbar;
    return r;
  }
  if (method != PhaseMethod::line_integral)
    throw std::invalid_argument("sagnac_phase: method must be closed_form or line_integral");
  // composite midpoint rule along each segment; the integrand is linear in x,
  // so the rule is exact per subdivision
  double acc = 0.0;
  const std::size_t n = path.vertices.size();
  const int s = path.subdivisions;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = path.vertices[i];
    const Vec3& b = path.vertices[(i + 1) % n];
    const Vec3 dl = (b - a) / static_cast<double>(s);
    for (int j = 0; j < s; ++j) {
      const Vec3 mid = a + (static_cast<double>(j) + 0.5) * dl;
      acc += dot(dl, cross(setup.omega, mid));
    }
  }
  r.value = setup.mass * acc / setup.hbar;
  return r;
}

// ---------------------------------------------------------------------------
// Spin-rotation
// ---------------------------------------------------------------------------

inline PhaseResult spin_phase_operator(const RotationSetup& setup, double t,
                                       PhaseMethod method = PhaseMethod::closed_form,
                                       int ordered_steps = 10000) {
  if (t < 0.0) throw std::invalid_argument("spin_phase_operator: t must be >= 0");
  PhaseResult r;
  r.method = method;
  if (method == PhaseMethod::closed_form) {
    r.op = pauli_exponential((t / 2.0) * setup.omega);
    return r;
  }
  if (method != PhaseMethod::ordered_product)
    throw std::invalid_argument("spin_phase_operator: method must be closed_form or ordered_product");
  if (ordered_steps < 1) throw std::invalid_argument("spin_phase_operator: ordered_steps must be >= 1");
  // time-ordered product of short-step exponentials (later factors on the left)
  const double dt = t / static_cast<double>(ordered_steps);
  const Mat2c f = pauli_exponential((dt / 2.0) * setup.omega);
  Mat2c acc = Mat2c::identity();
  for (int k = 0; k < ordered_steps; ++k) {
    acc = f * acc;
    if ((k & 511) == 511) acc = su2_project(acc);
  }
  r.op = su2_project(acc);
  return r;
}

// ---------------------------------------------------------------------------
// Spin-orbit
// ---------------------------------------------------------------------------

namespace detail {

/// Exact generator of the spin-orbit phase across the straight segment a->b,
/// as the sigma.v vector of (1/hbar) integral dl.(S x E). E is linear in x,
/// so the segment integral has the closed form (Omega^2/2c^2) (a_p + b_p)/2 x (b - a)
/// with a_p, b_p the projections perpendicular to Omega.
inline Vec3 segment_generator(const Vec3& a, const Vec3& b, const RotationSetup& setup) {
  const double pref = norm_squared(setup.omega) / (2.0 * setup.c * setup.c);
  const Vec3 omega_hat = normalized(setup.omega);
  // integral of r_perp x dl over the segment: project both endpoints
  const Vec3 ap = a - dot(omega_hat, a) * omega_hat;
  const Vec3 bp = b - dot(omega_hat, b) * omega_hat;
  const Vec3 d = b - a;
  // integral r_perp x dl = ap x d + (1/2) (bp - ap) x d = (1/2)(ap + bp) x d
  return pref * (0.5 * cross(ap + bp, d));
}

}  // namespace detail

inline PhaseResult spin_orbit_operator(const ClosedPath& path, const RotationSetup& setup,
                                       PhaseMethod method = PhaseMethod::ordered_product) {
  PhaseResult r;
  r.method = method;
  if (norm_squared(setup.omega) == 0.0) {
    r.op = Mat2c::identity();
    return r;
  }
  if (method == PhaseMethod::closed_form) {
    // exp(i 2 Omega^2 A.S / hbar c^2) with A the oriented area enclosed by the
    // path; exact for loops centered on the rotation axis
    const Vec3 arg = (norm_squared(setup.omega) / (setup.c * setup.c)) * enclosed_area(path);
    r.op = pauli_exponential(arg);
    return r;
  }
  if (method != PhaseMethod::ordered_product)
    throw std::invalid_argument("spin_orbit_operator: method must be closed_form or ordered_product");
  // path-ordered product of per-subsegment exponentials, later segments left
  Mat2c acc = Mat2c::identity();
  const std::size_t n = path.vertices.size();
  const int s = path.subdivisions;
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = path.vertices[i];
    const Vec3& b = path.vertices[(i + 1) % n];
    const Vec3 step = (b - a) / static_cast<double>(s);
    for (int j = 0; j < s; ++j) {
      const Vec3 p = a + static_cast<double>(j) * step;
      const Vec3 q = p + step;
      acc = pauli_exponential(detail::segment_generator(p, q, setup)) * acc;
      if ((++count & 511) == 0) acc = su2_project(acc);
    }
  }
  r.op = su2_project(acc);
  return r;
}

/// Scalar reduction for spin polarized along the area normal (the +hbar/2
/// eigenstate convention): dphi = Omega^2 |A| / c^2, half the eigenphase
/// splitting of the closed-form operator. Planar paths only.
inline PhaseResult spin_orbit_scalar_phase(const ClosedPath& path, const RotationSetup& setup) {
  if (!is_planar(path))
    throw std::invalid_argument("spin_orbit_scalar_phase: path must be planar for the scalar reduction");
  PhaseResult r;
  r.method = PhaseMethod::closed_form;
  const double area = norm(enclosed_area(path));
  r.value = norm_squared(setup.omega) * area / (setup.c * setup.c);
  return r;
}

// ---------------------------------------------------------------------------
// Weak-field phase (spacetime loop)
// ---------------------------------------------------------------------------

/// Static weak-field potential with contravariant components
/// G^mu = (h_00 / 2, -h_0i); both entries are dimensionless metric data.
struct WeakPotential {
  std::function<double(const Vec3&)> g0;
  std::function<Vec3(const Vec3&)> gvec;
};

struct SpacetimeVertex {
  double t = 0.0;
  Vec3 x;
};

/// Closed loop in (t, x); closure from the last vertex back to the first is
/// implicit, mirroring ClosedPath.
struct SpacetimeLoop {
  std::vector<SpacetimeVertex> vertices;
  int subdivisions = 1;

  SpacetimeLoop(std::vector<SpacetimeVertex> v, int subdiv = 1)
      : vertices(std::move(v)), subdivisions(subdiv) {
    if (vertices.size() < 3) throw std::invalid_argument("SpacetimeLoop: at least 3 vertices required");
    const auto& a = vertices.front();
    const auto& b = vertices.back();
    if (a.t == b.t && a.x == b.x)
      throw std::invalid_argument("SpacetimeLoop: first vertex must not repeat the last (closure is implicit)");
    if (subdivisions < 1) throw std::invalid_argument("SpacetimeLoop: subdivisions must be >= 1");
  }

  /// Purely spatial loop at a fixed time.
  static SpacetimeLoop spatial(const ClosedPath& p, double t = 0.0) {
    std::vector<SpacetimeVertex> v;
    v.reserve(p.vertices.size());
    for (const Vec3& x : p.vertices) v.push_back({t, x});
    return SpacetimeLoop(std::move(v), p.subdivisions);
  }
};

/// dphi = -(m c / hbar) closed-loop integral of G_mu dx^mu with x^0 = c t and
/// G_mu = (G^0, -Gvec). Gauge transformations G^mu -> G^mu - d^mu xi_0 change
/// the integrand by an exact differential and leave the result invariant.
inline PhaseResult weakfield_phase(const SpacetimeLoop& loop, const WeakPotential& g,
                                   const RotationSetup& setup) {
  PhaseResult r;
  r.method = PhaseMethod::line_integral;
  double acc = 0.0;  // integral of [G^0 c dt - Gvec.dx]
  const std::size_t n = loop.vertices.size();
  const int s = loop.subdivisions;
  for (std::size_t i = 0; i < n; ++i) {
    const SpacetimeVertex& a = loop.vertices[i];
    const SpacetimeVertex& b = loop.vertices[(i + 1) % n];
    const double dt = (b.t - a.t) / static_cast<double>(s);
    const Vec3 dx = (b.x - a.x) / static_cast<double>(s);
    for (int j = 0; j < s; ++j) {
      const Vec3 mid = a.x + (static_cast<double>(j) + 0.5) * dx;
      acc += g.g0(mid) * setup.c * dt - dot(g.gvec(mid), dx);
    }
  }
  r.value = -(setup.mass * setup.c / setup.hbar) * acc;
  return r;
}

}  // namespace rotqm
