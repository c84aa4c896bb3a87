#include "apnls/time_loop.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "apnls/observables.hpp"

namespace apnls::hydro {

std::vector<double> output_schedule(double t0, double t_final, std::vector<double> times) {
  if (!(t_final > t0)) throw std::invalid_argument("run: t_final must exceed the initial time");
  if (!std::is_sorted(times.begin(), times.end())) {
    throw std::invalid_argument("run: output times must be sorted");
  }
  for (double t : times) {
    if (!(t > t0) || t > t_final) throw std::invalid_argument("run: output time outside (t0, t_final]");
  }
  times.erase(std::unique(times.begin(), times.end()), times.end());
  if (times.empty() || times.back() != t_final) times.push_back(t_final);
  return times;
}

RunResult run(HydroState state, double t_final, const Nonlinearity& nl, const RunOptions& options) {
  validate(state);
  const auto schedule = output_schedule(state.t, t_final, options.output_times);
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  const double viscosity = state.epsilon * state.epsilon;
  const bool trapezoid = options.phase_quadrature == obs::PhaseQuadrature::trapezoid;
  std::optional<RealField> g_left;
  if (options.track_phase && trapezoid) {
    g_left = obs::phase_integrand(state.a, state.v, viscosity, nl, state.t);
  }

  for (double target : schedule) {
    while (state.t < target) {
      double dt = options.fixed_dt ? *options.fixed_dt : cfl_dt(state, nl, options.cfl, options.dt_max);
      if (!(dt > 0.0)) throw std::invalid_argument("run: non-positive time step");
      const double remaining = target - state.t;
      const bool lands = dt >= remaining - 1e-12 * std::max(1.0, std::abs(target));
      if (lands) dt = remaining;

      HydroState next = state;
      try {
        split_step(next, dt, viscosity, nl, options.scheme);
      } catch (const BlowUpError& e) {
        throw BlowUpError(std::string(e.what()) + " at t=" + std::to_string(state.t), state.t,
                          std::make_shared<const HydroState>(state));
      }
      if (!next.a.all_finite() || !next.v.all_finite()) {
        throw BlowUpError("run: non-finite state at t=" + std::to_string(state.t), state.t,
                          std::make_shared<const HydroState>(state));
      }
      if (lands) next.t = target;
      if (options.track_phase && trapezoid) {
        RealField g_right = obs::phase_integrand(next.a, next.v, viscosity, nl, next.t);
        for (std::size_t i = 0; i < next.phi.size(); ++i) {
          next.phi[i] -= 0.5 * dt * ((*g_left)[i] + g_right[i]);
        }
        g_left = std::move(g_right);
      } else if (options.track_phase) {
        obs::accumulate_phase(next.phi, state.a, state.v, state.epsilon, dt, nl, state.t);
      }
      state = std::move(next);
      ++result.steps;
      if (options.on_step) options.on_step(state, dt);
    }
    result.snapshots.push_back(state);
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace apnls::hydro
