#include "apnls/strang.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "apnls/spectral.hpp"

namespace apnls::hydro {
namespace {

void kick(HydroState& s, double dt, const Nonlinearity& nl, double t) {
  const auto& potential = nl.potential();
  if (potential.is_zero()) return;
  const RealVectorField grad = potential.gradient(s.grid_ptr(), t);
  for (int d = 0; d < s.v.dim(); ++d) {
    for (std::size_t i = 0; i < s.v.size(); ++i) s.v[d][i] -= dt * grad[d][i];
  }
}

void sweep(HydroState& s, double dt, int direction, const Nonlinearity& nl,
           const SchemeOptions& options) {
  lax_wendroff_sweep(s.a, s.v, dt, direction, s.epsilon, nl, options.lax_wendroff);
}

void sweeps_2d(HydroState& s, double dt, int first, const Nonlinearity& nl,
               const SchemeOptions& options) {
  const int second = 1 - first;
  sweep(s, 0.5 * dt, first, nl, options);
  sweep(s, dt, second, nl, options);
  sweep(s, 0.5 * dt, first, nl, options);
}

}  // namespace

void transport_substep(HydroState& s, double dt, const Nonlinearity& nl,
                       const SchemeOptions& options) {
  const bool linear = !nl.couples_density();
  const double t_mid = s.t + 0.5 * dt;
  if (linear) kick(s, 0.5 * dt, nl, t_mid);
  if (s.grid().dim() == 1) {
    sweep(s, dt, 0, nl, options);
  } else if (options.sweep_order == SweepOrder::xyx) {
    sweeps_2d(s, dt, 0, nl, options);
  } else {
    HydroState other = s;
    sweeps_2d(s, dt, 0, nl, options);
    sweeps_2d(other, dt, 1, nl, options);
    for (std::size_t i = 0; i < s.a.size(); ++i) s.a[i] = 0.5 * (s.a[i] + other.a[i]);
    for (int d = 0; d < s.v.dim(); ++d) {
      for (std::size_t i = 0; i < s.a.size(); ++i) s.v[d][i] = 0.5 * (s.v[d][i] + other.v[d][i]);
    }
  }
  if (linear) kick(s, 0.5 * dt, nl, t_mid);
}

void split_step(HydroState& s, double dt, double viscosity, const Nonlinearity& nl,
                const SchemeOptions& options) {
  if (!(dt > 0.0)) throw std::invalid_argument("split_step: dt must be > 0");
  const double half = 0.5 * dt;
  s.a = spectral::schrodinger_propagate(std::move(s.a), s.epsilon, half);
  s.v = spectral::heat_propagate(s.v, viscosity, half);
  transport_substep(s, dt, nl, options);
  s.a = spectral::schrodinger_propagate(std::move(s.a), s.epsilon, half);
  s.v = spectral::heat_propagate(s.v, viscosity, half);
  s.t += dt;
}

HydroState strang_step(HydroState s, double dt, const Nonlinearity& nl,
                       const SchemeOptions& options) {
  split_step(s, dt, s.epsilon * s.epsilon, nl, options);
  return s;
}

double cfl_dt(const HydroState& s, double cfl, double dt_max) {
  double speed = 0.0;
  for (std::size_t i = 0; i < s.a.size(); ++i) {
    double vmax = 0.0;
    for (int d = 0; d < s.v.dim(); ++d) vmax = std::max(vmax, std::abs(s.v[d][i]));
    speed = std::max(speed, vmax + std::abs(s.a[i]));
  }
  if (speed < 1e-14) return dt_max;
  return cfl * s.grid().min_spacing() / speed;
}

double cfl_dt(const HydroState& s, const Nonlinearity& nl, double cfl, double dt_max) {
  if (nl.kind() == Nonlinearity::Kind::cubic) return cfl_dt(s, cfl, dt_max);
  double speed = 0.0;
  for (std::size_t i = 0; i < s.a.size(); ++i) {
    double vmax = 0.0;
    for (int d = 0; d < s.v.dim(); ++d) vmax = std::max(vmax, std::abs(s.v[d][i]));
    const double rho = std::norm(s.a[i]);
    speed = std::max(speed, vmax + std::sqrt(rho * nl.df(rho)));
  }
  if (speed < 1e-14) return dt_max;
  return cfl * s.grid().min_spacing() / speed;
}

}  // namespace apnls::hydro
