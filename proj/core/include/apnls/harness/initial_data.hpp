#pragma once

#include "apnls/harness/config.hpp"
#include "apnls/hydro_state.hpp"
#include "apnls/nls_reference.hpp"

namespace apnls::harness {

/// Nodal initial amplitude, velocity and phase with v = grad phi.
struct InitialFields {
  ComplexField a;
  RealVectorField v;
  RealField phi;
};

/// Evaluates the catalog entry on the grid:
///   gauss-logcosh-1d   a = exp(-25 s^2), v = -tanh(5 s), phi = -ln cosh(5 s) / 5, s = x - 0.5
///   gauss-logcosh-2d   same profile in r = |x - (0.5, 0.5)|, v radial
///   maxwell-2temp      a = (1/2) exp(-dx^2/(2 th1) - dy^2/(2 th2)) / (2 pi sqrt(th1 th2)),
///                      th1 = 0.05, th2 = 0.015, v = 0, phi = 0
///   plane-wave         a = amplitude, v = 0, phi = 0
///   cosine-phase       a = amplitude, phi = cos(2 pi (x - lower) / L), v = phi'
///   custom-snapshot    a from a complex snapshot, phi from an optional phase
///                      snapshot (v spectral), on the grid or a finer nested one
/// Throws ConfigError for unknown tags or incompatible grids.
InitialFields build_initial(const InitialConfig& config, const GridPtr& grid);

HydroState build_hydro_state(const InitialConfig& config, const GridPtr& grid, double epsilon);

/// u0 = a0 exp(i phi0 / eps); eps must be positive.
nls::WaveState build_wave_state(const InitialConfig& config, const GridPtr& grid, double epsilon);

}  // namespace apnls::harness
