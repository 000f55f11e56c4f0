#pragma once

// Oriented polyline loop (interferometer beam path). The loop is implicitly
// closed: the last vertex connects back to the first. The oriented enclosed
// area is the vector shoelace sum A = 1/2 sum_i x_i x x_{i+1}, which is what
// the circulation of any linear field produces via Stokes, planar or not.

#include <stdexcept>
#include <vector>
#include <cmath>
#include <algorithm>

#include "rotqm/vec3.hpp"

namespace rotqm {

struct ClosedPath {
  std::vector<Vec3> vertices;
  int subdivisions = 1;  // quadrature refinement per segment

  ClosedPath(std::vector<Vec3> verts, int subdiv = 1) : vertices(std::move(verts)), subdivisions(subdiv) {
    if (vertices.size() < 3) throw std::invalid_argument("ClosedPath: at least 3 vertices required");
    if (vertices.front() == vertices.back())
      throw std::invalid_argument("ClosedPath: first vertex must not repeat the last (closure is implicit)");
    if (subdivisions < 1) throw std::invalid_argument("ClosedPath: subdivisions must be >= 1");
  }

  std::size_t num_segments() const { return vertices.size(); }

  /// Regular n-gon of the given radius in a plane perpendicular to the z axis.
  static ClosedPath regular_polygon(std::size_t n, double radius, const Vec3& center = {}, int subdiv = 1) {
    if (n < 3) throw std::invalid_argument("regular_polygon: need n >= 3");
    const double two_pi = 6.283185307179586476925286766559;
    std::vector<Vec3> v;
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double a = two_pi * static_cast<double>(k) / static_cast<double>(n);
      v.push_back(center + Vec3{radius * std::cos(a), radius * std::sin(a), 0.0});
    }
    return ClosedPath(std::move(v), subdiv);
  }
};

inline ClosedPath reversed(const ClosedPath& p) {
  std::vector<Vec3> v(p.vertices.rbegin(), p.vertices.rend());
  return ClosedPath(std::move(v), p.subdivisions);
}

/// Oriented enclosed area A = 1/2 sum_i x_i x x_{i+1} (cyclic). Reversing the
/// vertex order negates the result; collinear paths give the zero vector.
inline Vec3 enclosed_area(const ClosedPath& p) {
  Vec3 a{};
  const std::size_t n = p.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& u = p.vertices[i];
    const Vec3& v = p.vertices[(i + 1) % n];
    a += cross(u, v);
  }
  return 0.5 * a;
}

/// True when every vertex lies in one plane (within tol relative to the path
/// extent). Collinear/degenerate paths count as planar.
inline bool is_planar(const ClosedPath& p, double tol = 1e-9) {
  const std::size_t n = p.vertices.size();
  double scale = 0.0;
  for (const Vec3& v : p.vertices) scale = std::max(scale, norm(v - p.vertices[0]));
  if (scale == 0.0) return true;
  // pick the most orthogonal edge pair for a stable normal
  Vec3 nrm{};
  double best = 0.0;
  const Vec3 e0 = p.vertices[1] - p.vertices[0];
  for (std::size_t i = 2; i < n; ++i) {
    const Vec3 c = cross(e0, p.vertices[i] - p.vertices[0]);
    if (norm(c) > best) {
      best = norm(c);
      nrm = c;
    }
  }
  if (best == 0.0) return true;  // all collinear
  nrm = normalized(nrm);
  for (const Vec3& v : p.vertices)
    if (std::abs(dot(v - p.vertices[0], nrm)) > tol * scale) return false;
  return true;
}

}  // namespace rotqm
