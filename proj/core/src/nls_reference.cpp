#include "apnls/nls_reference.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "apnls/spectral.hpp"
#include "apnls/time_loop.hpp"

namespace apnls::nls {

void validate(const WaveState& s) {
  if (!(s.epsilon > 0.0)) throw std::invalid_argument("wave state: epsilon must be > 0");
  if (!s.u.all_finite()) throw std::invalid_argument("wave state: non-finite values");
}

ComplexField kinetic_substep(ComplexField u, double dt, double epsilon) {
  return spectral::schrodinger_propagate(std::move(u), epsilon, dt);
}

ComplexField nonlinear_substep(ComplexField u, double dt, double epsilon, const Nonlinearity& nl,
                               double t) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("nonlinear_substep: epsilon must be > 0");
  const double scale = dt / epsilon;
  if (nl.couples_density()) {
    for (auto& z : u.values()) z *= std::polar(1.0, -nl.f(std::norm(z)) * scale);
  } else if (!nl.potential().is_zero()) {
    const RealField V = nl.potential().sample(u.grid_ptr(), t);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] *= std::polar(1.0, -V[i] * scale);
  }
  return u;
}

WaveState strang_step(WaveState s, double dt, const Nonlinearity& nl) {
  if (!(dt > 0.0)) throw std::invalid_argument("strang_step: dt must be > 0");
  const double half = 0.5 * dt;
  s.u = kinetic_substep(std::move(s.u), half, s.epsilon);
  s.u = nonlinear_substep(std::move(s.u), dt, s.epsilon, nl, s.t);
  s.u = kinetic_substep(std::move(s.u), half, s.epsilon);
  s.t += dt;
  return s;
}

SolveResult strang_solve(WaveState state, double t_final, double dt, const Nonlinearity& nl,
                         std::vector<double> output_times) {
  validate(state);
  if (!(dt > 0.0)) throw std::invalid_argument("strang_solve: dt must be > 0");
  const auto schedule = hydro::output_schedule(state.t, t_final, std::move(output_times));
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  for (double target : schedule) {
    const double length = target - state.t;
    const auto steps = static_cast<std::size_t>(std::ceil(length / dt - 1e-9));
    const std::size_t n = std::max<std::size_t>(steps, 1);
    const double h = length / static_cast<double>(n);
    const double t0 = state.t;
    for (std::size_t k = 0; k < n; ++k) {
      state = strang_step(std::move(state), h, nl);
      state.t = t0 + static_cast<double>(k + 1) * h;
    }
    state.t = target;
    result.steps += n;
    result.snapshots.push_back(state);
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

double energy(const ComplexField& u, double epsilon, const Nonlinearity& nl) {
  double kinetic = 0.0;
  for (int d = 0; d < u.grid().dim(); ++d) {
    const ComplexField du = spectral::gradient(u, d);
    for (const auto& z : du.values()) kinetic += std::norm(epsilon * z);
  }
  double potential = 0.0;
  for (const auto& z : u.values()) potential += nl.antiderivative(std::norm(z));
  return (0.5 * kinetic + potential) * u.grid().cell_volume();
}

}  // namespace apnls::nls
