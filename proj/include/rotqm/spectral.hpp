#pragma once

// Grid-aware spectral helpers: per-axis and full N-d transforms over the
// row-major (last axis fastest) layout used by WaveState.

#include <complex>
#include <vector>

#include "rotqm/fft.hpp"
#include "rotqm/grid.hpp"

namespace rotqm {

inline std::size_t axis_stride(const GridSpec& g, int axis) {
  std::size_t s = 1;
  for (int a = axis + 1; a < g.dim; ++a) s *= g.axes[a].n;
  return s;
}

/// Transform every line along `axis` of one component array.
inline void transform_axis(std::complex<double>* data, const GridSpec& g, int axis, const Fft& fft,
                           bool forward) {
  const std::size_t n = g.axes[axis].n;
  const std::size_t stride = axis_stride(g, axis);
  const std::size_t block = stride * n;
  const std::size_t npts = g.num_points();
  for (std::size_t outer = 0; outer < npts; outer += block) {
    for (std::size_t inner = 0; inner < stride; ++inner) {
      std::complex<double>* base = data + outer + inner;
      if (forward)
        fft.forward_strided(base, stride);
      else
        fft.inverse_strided(base, stride);
    }
  }
}

/// Full N-dimensional transform of one component array.
inline void transform_nd(std::complex<double>* data, const GridSpec& g, bool forward) {
  for (int a = 0; a < g.dim; ++a) {
    Fft fft(g.axes[a].n);
    transform_axis(data, g, a, fft, forward);
  }
}

}  // namespace rotqm
