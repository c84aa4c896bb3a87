#pragma once

#include <optional>
#include <vector>

#include "apnls/field.hpp"
#include "apnls/observables.hpp"
#include "apnls/potential.hpp"
#include "apnls/strang.hpp"

/// Linear Schrodinger pathway: the viscous eikonal equation
///   phi_t + |grad phi|^2 / 2 + V = nu Lap phi
/// marched through v = grad phi, and the amplitude transport it drives.
namespace apnls::eikonal {

struct EikonalFrame {
  double t = 0.0;
  RealVectorField v;
  RealField phi;
};

/// Every accepted step of an eikonal run; frames.front() is the initial data.
struct EikonalTrajectory {
  double viscosity = 1.0;
  PotentialSpec potential;
  std::vector<EikonalFrame> frames;

  const EikonalFrame& final() const { return frames.back(); }
};

struct EikonalOptions {
  double cfl = hydro::kDefaultCfl;
  double dt_max = hydro::kDefaultDtMax;
  std::optional<double> fixed_dt;
  hydro::SchemeOptions scheme;
  obs::PhaseQuadrature phase_quadrature = obs::PhaseQuadrature::trapezoid;
};

/// Heat(nu) and Lax-Wendroff transport with a split grad V source on
/// v = grad phi; phi is recovered by quadrature of |v|^2/2 + V - nu div v.
/// phi0 must be periodic.
EikonalTrajectory eikonal_run(const RealField& phi0, const PotentialSpec& potential,
                              double viscosity, double t_final, const EikonalOptions& options = {});

/// Exact solution for V = 0, nu = 1 via psi = exp(-phi/2), which solves the
/// heat equation: phi(t) = -2 log(heat(exp(-phi0/2), 1, t)). Throws
/// std::domain_error when exp(-phi0/2) under- or overflows.
RealField cole_hopf_oracle(const RealField& phi0, double t);

struct AmplitudeTrajectory {
  std::vector<double> times;
  std::vector<ComplexField> a;
};

/// Marches a_t + v.grad a + a div v / 2 = i eps/2 Lap a - i eps a div v with v
/// taken from the trajectory at the start of every step. The amplitude never
/// feeds back into v.
AmplitudeTrajectory linear_amplitude_run(const ComplexField& a0,
                                         const EikonalTrajectory& trajectory, double epsilon,
                                         const hydro::SchemeOptions& scheme = {});

}  // namespace apnls::eikonal
