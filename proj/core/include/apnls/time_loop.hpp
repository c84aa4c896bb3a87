#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "apnls/observables.hpp"
#include "apnls/strang.hpp"

namespace apnls::hydro {

struct RunOptions {
  double cfl = kDefaultCfl;
  double dt_max = kDefaultDtMax;
  /// Overrides the CFL controller (steps are still clipped onto output times).
  std::optional<double> fixed_dt;
  /// Sorted times in (t0, t_final]; empty means {t_final}.
  std::vector<double> output_times;
  /// Accumulate phi once per step.
  bool track_phase = true;
  obs::PhaseQuadrature phase_quadrature = obs::PhaseQuadrature::left_rectangle;
  SchemeOptions scheme;
  /// Called after every accepted step with the new state and the step size.
  std::function<void(const HydroState&, double)> on_step;
};

struct RunResult {
  std::vector<HydroState> snapshots;  // one per output time
  std::size_t steps = 0;
  double wall_seconds = 0.0;
};

/// Marches the asymptotic-preserving scheme to t_final. Throws BlowUpError
/// carrying the last valid state if a step goes non-finite.
RunResult run(HydroState initial, double t_final, const Nonlinearity& nl,
              const RunOptions& options = {});

/// Resolves the output schedule: validates ordering and appends t_final.
std::vector<double> output_schedule(double t0, double t_final, std::vector<double> times);

}  // namespace apnls::hydro
