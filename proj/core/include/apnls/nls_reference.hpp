#pragma once

#include <vector>

#include "apnls/field.hpp"
#include "apnls/nonlinearity.hpp"

/// Classical Strang time splitting for i eps u_t + eps^2/2 Lap u = g u with
/// g = f(|u|^2) or V_ext(t, x).
namespace apnls::nls {

struct WaveState {
  ComplexField u;
  double t = 0.0;
  double epsilon = 0.0;
};

/// Rejects eps <= 0 or non-finite entries.
void validate(const WaveState& s);

/// Free flow over dt: mode k times exp(-i eps |k|^2 dt / 2).
ComplexField kinetic_substep(ComplexField u, double dt, double epsilon);

/// Exact pointwise flow u <- u exp(-i g dt / eps), g frozen at time t.
ComplexField nonlinear_substep(ComplexField u, double dt, double epsilon, const Nonlinearity& nl,
                               double t = 0.0);

/// kinetic(dt/2), nonlinear(dt), kinetic(dt/2).
WaveState strang_step(WaveState s, double dt, const Nonlinearity& nl);

struct SolveResult {
  std::vector<WaveState> snapshots;  // one per output time
  std::size_t steps = 0;
  double wall_seconds = 0.0;
};

/// Marches to t_final with steps of at most dt: each interval between output
/// times is cut into ceil(length/dt) equal steps.
SolveResult strang_solve(WaveState initial, double t_final, double dt, const Nonlinearity& nl,
                         std::vector<double> output_times = {});

/// 1/2 ||eps grad u||^2 + sum F(|u|^2) dV (the conserved Hamiltonian; F = int f).
double energy(const ComplexField& u, double epsilon, const Nonlinearity& nl);

}  // namespace apnls::nls
