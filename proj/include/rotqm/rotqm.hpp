#pragma once

// Umbrella header for the rotating-frame quantum mechanics library.

#include "rotqm/vec3.hpp"
#include "rotqm/mat2.hpp"
#include "rotqm/setup.hpp"
#include "rotqm/gauge_field.hpp"
#include "rotqm/grid.hpp"
#include "rotqm/fft.hpp"
#include "rotqm/spectral.hpp"
#include "rotqm/wavestate.hpp"
#include "rotqm/path.hpp"
#include "rotqm/observables.hpp"
#include "rotqm/boosts.hpp"
#include "rotqm/hamiltonian.hpp"
#include "rotqm/propagate.hpp"
#include "rotqm/ehrenfest.hpp"
#include "rotqm/phases.hpp"
#include "rotqm/gamma.hpp"
#include "rotqm/metric.hpp"
#include "rotqm/dense.hpp"
#include "rotqm/dirac_operators.hpp"
#include "rotqm/io.hpp"
