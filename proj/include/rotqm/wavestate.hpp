#pragma once

// Scalar or 2-spinor wavefunction sampled on a uniform grid. Amplitudes are
// stored component-major: all grid points of component 0, then component 1.

#include <complex>
#include <stdexcept>
#include <vector>
#include <cmath>

#include "rotqm/grid.hpp"
#include "rotqm/vec3.hpp"

namespace rotqm {

class WaveState {
 public:
  using cd = std::complex<double>;

  WaveState(GridSpec grid, int components, double time = 0.0)
      : grid_(grid), components_(components), time_(time) {
    if (components != 1 && components != 2)
      throw std::invalid_argument("WaveState: components must be 1 (scalar) or 2 (spinor)");
    grid_.validate();
    amps_.assign(static_cast<std::size_t>(components) * grid_.num_points(), cd(0.0, 0.0));
  }

  const GridSpec& grid() const { return grid_; }
  GridSpec& grid() { return grid_; }
  int components() const { return components_; }
  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  cd& at(int component, std::size_t flat) { return amps_[static_cast<std::size_t>(component) * grid_.num_points() + flat]; }
  const cd& at(int component, std::size_t flat) const { return amps_[static_cast<std::size_t>(component) * grid_.num_points() + flat]; }

  cd* component_data(int component) { return amps_.data() + static_cast<std::size_t>(component) * grid_.num_points(); }
  const cd* component_data(int component) const { return amps_.data() + static_cast<std::size_t>(component) * grid_.num_points(); }

  std::vector<cd>& amplitudes() { return amps_; }
  const std::vector<cd>& amplitudes() const { return amps_; }

  void scale(cd s) {
    for (cd& a : amps_) a *= s;
  }

  /// Normalized Gaussian packet exp(-(x-c)^2/(4 sigma^2) + i p.x/hbar) on the
  /// grid axes in use; sigma is the position-space standard deviation.
  static WaveState gaussian(const GridSpec& grid, const Vec3& center, const Vec3& sigma,
                            const Vec3& momentum, double hbar) {
    WaveState s(grid, 1);
    fill_gaussian(s, 0, center, sigma, momentum, hbar, cd(1.0, 0.0));
    return s;
  }

  /// 2-spinor Gaussian with the same orbital packet in both components,
  /// weighted by (w0, w1).
  static WaveState spinor_gaussian(const GridSpec& grid, const Vec3& center, const Vec3& sigma,
                                   const Vec3& momentum, double hbar, cd w0, cd w1) {
    WaveState s(grid, 2);
    fill_gaussian(s, 0, center, sigma, momentum, hbar, w0);
    fill_gaussian(s, 1, center, sigma, momentum, hbar, w1);
    return s;
  }

 private:
  static void fill_gaussian(WaveState& s, int comp, const Vec3& center, const Vec3& sigma,
                            const Vec3& momentum, double hbar, cd weight) {
    const GridSpec& g = s.grid();
    const double pi = 3.1415926535897932384626433832795;
    double prefactor = 1.0;
    for (int a = 0; a < g.dim; ++a) {
      const double sa = sigma[a];
      if (!(sa > 0.0)) throw std::invalid_argument("gaussian: sigma must be positive on every grid axis");
      prefactor *= std::pow(2.0 * pi * sa * sa, -0.25);
    }
    const std::size_t npts = g.num_points();
    for (std::size_t f = 0; f < npts; ++f) {
      const Vec3 x = g.point(f);
      const Vec3 d = x - center;
      double expo = 0.0;
      for (int a = 0; a < g.dim; ++a) expo -= d[a] * d[a] / (4.0 * sigma[a] * sigma[a]);
      const double phase = dot(momentum, x) / hbar;
      s.at(comp, f) = weight * cd(prefactor * std::exp(expo)) * std::polar(1.0, phase);
    }
  }

  GridSpec grid_;
  int components_;
  double time_;
  std::vector<cd> amps_;
};

/// Trapezoid quadrature weight for one point (1 on periodic grids, halved on
/// non-periodic axis endpoints).
inline double quadrature_weight(const GridSpec& g, std::size_t flat) {
  if (g.periodic) return 1.0;
  double w = 1.0;
  const auto idx = g.unflatten(flat);
  for (int a = 0; a < g.dim; ++a)
    if (idx[a] == 0 || idx[a] + 1 == g.axes[a].n) w *= 0.5;
  return w;
}

/// L2 norm sqrt(sum_c integral |psi_c|^2 dV) by grid quadrature.
inline double grid_norm(const WaveState& s) {
  const GridSpec& g = s.grid();
  const std::size_t npts = g.num_points();
  double acc = 0.0;
  for (int c = 0; c < s.components(); ++c) {
    const auto* d = s.component_data(c);
    for (std::size_t f = 0; f < npts; ++f) acc += quadrature_weight(g, f) * std::norm(d[f]);
  }
  const double n2 = acc * g.cell_volume();
  if (!std::isfinite(n2)) throw std::domain_error("grid_norm: state amplitudes are not finite");
  return std::sqrt(n2);
}

inline void normalize(WaveState& s) {
  const double n = grid_norm(s);
  if (n == 0.0) throw std::domain_error("normalize: zero state");
  s.scale(1.0 / n);
}

}  // namespace rotqm
