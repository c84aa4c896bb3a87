#include "apnls/eikonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "apnls/nonlinearity.hpp"
#include "apnls/observables.hpp"
#include "apnls/spectral.hpp"

namespace apnls::eikonal {

EikonalTrajectory eikonal_run(const RealField& phi0, const PotentialSpec& potential,
                              double viscosity, double t_final, const EikonalOptions& options) {
  if (!(viscosity > 0.0)) throw std::invalid_argument("eikonal_run: viscosity must be > 0");
  if (!(t_final > 0.0)) throw std::invalid_argument("eikonal_run: t_final must be > 0");
  const auto grid = phi0.grid_ptr();
  const Nonlinearity nl = Nonlinearity::linear_potential(potential);

  HydroState s{ComplexField(grid), spectral::gradient(phi0), phi0, 0.0, 0.0};
  EikonalTrajectory traj{viscosity, potential, {}};
  traj.frames.push_back({0.0, s.v, s.phi});
  const ComplexField vacuum(grid);
  RealField g_left = obs::phase_integrand(vacuum, s.v, viscosity, nl, s.t);

  while (s.t < t_final) {
    double dt = options.fixed_dt ? *options.fixed_dt : hydro::cfl_dt(s, nl, options.cfl, options.dt_max);
    const double remaining = t_final - s.t;
    const bool lands = dt >= remaining - 1e-12 * std::max(1.0, t_final);
    if (lands) dt = remaining;
    const double t_left = s.t;
    try {
      hydro::split_step(s, dt, viscosity, nl, options.scheme);
    } catch (const BlowUpError& e) {
      throw BlowUpError(std::string("eikonal_run: ") + e.what(), t_left);
    }
    if (lands) s.t = t_final;
    const RealField g_right = obs::phase_integrand(vacuum, s.v, viscosity, nl, s.t);
    const bool trapezoid = options.phase_quadrature == obs::PhaseQuadrature::trapezoid;
    for (std::size_t i = 0; i < s.phi.size(); ++i) {
      s.phi[i] -= trapezoid ? 0.5 * dt * (g_left[i] + g_right[i]) : dt * g_left[i];
    }
    g_left = g_right;
    traj.frames.push_back({s.t, s.v, s.phi});
  }
  return traj;
}

RealField cole_hopf_oracle(const RealField& phi0, double t) {
  if (t < 0.0) throw std::invalid_argument("cole_hopf_oracle: t must be >= 0");
  const auto vals = phi0.values();
  const double shift = *std::min_element(vals.begin(), vals.end());
  ComplexField psi(phi0.grid_ptr());
  for (std::size_t i = 0; i < phi0.size(); ++i) {
    const double w = std::exp(-0.5 * (phi0[i] - shift));
    if (!(w >= std::numeric_limits<double>::min()) || !std::isfinite(w)) {
      throw std::domain_error("cole_hopf_oracle: exp(-phi0/2) is not representable");
    }
    psi[i] = w;
  }
  psi = spectral::heat_propagate(std::move(psi), 1.0, t);
  RealField phi(phi0.grid_ptr());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double w = psi[i].real();
    if (!(w > 0.0)) throw std::domain_error("cole_hopf_oracle: transformed field lost positivity");
    phi[i] = shift - 2.0 * std::log(w);
  }
  return phi;
}

AmplitudeTrajectory linear_amplitude_run(const ComplexField& a0,
                                         const EikonalTrajectory& trajectory, double epsilon,
                                         const hydro::SchemeOptions& scheme) {
  if (trajectory.frames.empty()) throw std::invalid_argument("linear_amplitude_run: empty trajectory");
  const Nonlinearity nl = Nonlinearity::linear_potential(trajectory.potential);
  const auto& first = trajectory.frames.front();
  require_same_grid(a0.grid(), first.v.grid(), "linear_amplitude_run");
  HydroState s{a0, first.v, RealField(a0.grid_ptr()), first.t, epsilon};
  AmplitudeTrajectory out;
  out.times.push_back(s.t);
  out.a.push_back(s.a);
  for (std::size_t n = 0; n + 1 < trajectory.frames.size(); ++n) {
    const auto& left = trajectory.frames[n];
    const double dt = trajectory.frames[n + 1].t - left.t;
    s.v = left.v;
    s.t = left.t;
    hydro::split_step(s, dt, trajectory.viscosity, nl, scheme);
    out.times.push_back(trajectory.frames[n + 1].t);
    out.a.push_back(s.a);
  }
  return out;
}

}  // namespace apnls::eikonal
