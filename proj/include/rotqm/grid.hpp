#pragma once

// Uniform Cartesian grid in 1, 2 or 3 dimensions. Flat indexing is row-major
// with the last axis fastest, matching the binary snapshot layout.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <cmath>

#include "rotqm/vec3.hpp"

namespace rotqm {

struct AxisSpec {
  std::size_t n = 1;
  double origin = 0.0;
  double spacing = 1.0;
};

struct GridSpec {
  int dim = 1;
  std::array<AxisSpec, 3> axes{};  // axes[dim..2] unused
  bool periodic = true;

  static GridSpec make1d(std::size_t n, double origin, double spacing) {
    GridSpec g;
    g.dim = 1;
    g.axes[0] = {n, origin, spacing};
    g.validate();
    return g;
  }
  static GridSpec make2d(std::size_t nx, std::size_t ny, double ox, double oy, double dx, double dy) {
    GridSpec g;
    g.dim = 2;
    g.axes[0] = {nx, ox, dx};
    g.axes[1] = {ny, oy, dy};
    g.validate();
    return g;
  }
  static GridSpec make3d(std::size_t nx, std::size_t ny, std::size_t nz, const Vec3& origin, const Vec3& spacing) {
    GridSpec g;
    g.dim = 3;
    g.axes[0] = {nx, origin.x, spacing.x};
    g.axes[1] = {ny, origin.y, spacing.y};
    g.axes[2] = {nz, origin.z, spacing.z};
    g.validate();
    return g;
  }

  /// Square 2-D grid centered on the coordinate origin.
  static GridSpec centered_square(std::size_t n, double extent) {
    const double dx = extent / static_cast<double>(n);
    return make2d(n, n, -extent / 2.0, -extent / 2.0, dx, dx);
  }
  /// 1-D grid centered on the origin.
  static GridSpec centered_line(std::size_t n, double extent) {
    const double dx = extent / static_cast<double>(n);
    return make1d(n, -extent / 2.0, dx);
  }

  void validate() const {
    if (dim < 1 || dim > 3) throw std::invalid_argument("GridSpec: dim must be 1, 2 or 3");
    for (int a = 0; a < dim; ++a) {
      if (axes[a].n < 1) throw std::invalid_argument("GridSpec: axis size must be >= 1");
      if (!(axes[a].spacing > 0.0) || !std::isfinite(axes[a].spacing))
        throw std::invalid_argument("GridSpec: axis spacing must be positive and finite");
      if (!std::isfinite(axes[a].origin)) throw std::invalid_argument("GridSpec: axis origin must be finite");
    }
  }

  std::size_t num_points() const {
    std::size_t n = 1;
    for (int a = 0; a < dim; ++a) n *= axes[a].n;
    return n;
  }

  double cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= axes[a].spacing;
    return v;
  }

  double coord(int axis, std::size_t index) const {
    return axes[axis].origin + static_cast<double>(index) * axes[axis].spacing;
  }

  /// Signed FFT wavenumber for mode j on an axis: k = 2*pi*j'/(n*dx) with
  /// j' = j for j <= n/2 and j - n otherwise.
  double wavenumber(int axis, std::size_t j) const {
    const std::size_t n = axes[axis].n;
    const double two_pi = 6.283185307179586476925286766559;
    const long js = (j <= n / 2) ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(n);
    return two_pi * static_cast<double>(js) / (static_cast<double>(n) * axes[axis].spacing);
  }

  /// Decompose a flat index into per-axis indices.
  std::array<std::size_t, 3> unflatten(std::size_t flat) const {
    std::array<std::size_t, 3> idx{0, 0, 0};
    for (int a = dim - 1; a >= 0; --a) {
      idx[a] = flat % axes[a].n;
      flat /= axes[a].n;
    }
    return idx;
  }

  std::size_t flatten(const std::array<std::size_t, 3>& idx) const {
    std::size_t f = 0;
    for (int a = 0; a < dim; ++a) f = f * axes[a].n + idx[a];
    return f;
  }

  /// Coordinates of a grid point; unused axes report 0.
  Vec3 point(std::size_t flat) const {
    const auto idx = unflatten(flat);
    Vec3 p;
    if (dim > 0) p.x = coord(0, idx[0]);
    if (dim > 1) p.y = coord(1, idx[1]);
    if (dim > 2) p.z = coord(2, idx[2]);
    return p;
  }

  bool same_shape(const GridSpec& o) const {
    if (dim != o.dim || periodic != o.periodic) return false;
    for (int a = 0; a < dim; ++a)
      if (axes[a].n != o.axes[a].n || axes[a].spacing != o.axes[a].spacing) return false;
    return true;
  }
};

}  // namespace rotqm
