#pragma once

#include "apnls/field.hpp"
#include "apnls/nonlinearity.hpp"

namespace apnls::obs {

/// Particle density, current density and energy density.
struct ObservableSet {
  RealField rho;
  RealVectorField current;
  RealField energy;
};

/// rho = |a|^2, j = eps Im(conj(a) grad a) + rho v,
/// e = |eps grad a + i a v|^2 + |a|^4, with grad a taken spectrally.
ObservableSet observables(const ComplexField& a, const RealVectorField& v, double epsilon);

/// Same quantities from a wave function: rho = |u|^2, j = eps Im(conj(u) grad u),
/// e = |eps grad u|^2 + |u|^4.
ObservableSet wave_observables(const ComplexField& u, double epsilon);

/// Integrand of the phase equation: |v|^2/2 + g - viscosity * div v, where g is
/// f(|a|^2) for the nonlinear variants and V_ext(t) for the linear one.
RealField phase_integrand(const ComplexField& a, const RealVectorField& v, double viscosity,
                          const Nonlinearity& nl, double t);

enum class PhaseQuadrature {
  left_rectangle,  // integrand at the start of each step
  trapezoid,       // mean of the integrand at both ends of each step
};

/// Left-endpoint rectangle rule for one accepted step:
/// phi <- phi - dt * (|v|^2/2 + f(|a|^2) - eps^2 div v), evaluated at (a, v, t).
void accumulate_phase(RealField& phi, const ComplexField& a, const RealVectorField& v,
                      double epsilon, double dt, const Nonlinearity& nl, double t = 0.0);

/// u = a exp(i phi / eps). Rejects eps == 0.
ComplexField reconstruct(const ComplexField& a, const RealField& phi, double epsilon);

/// Restriction of a field to the nodes of a nested coarse grid.
RealField subsample(const RealField& fine, const GridPtr& coarse);
RealVectorField subsample(const RealVectorField& fine, const GridPtr& coarse);
ComplexField subsample(const ComplexField& fine, const GridPtr& coarse);

/// Cell-volume weighted l1 norm; vector fields sum componentwise magnitudes.
double l1_norm(const RealField& f);
double l1_norm(const RealVectorField& f);

/// ||ref - x||_1 / ||ref||_1. `ref` may live on a finer nested grid, in which
/// case it is subsampled onto x's nodes. Throws std::domain_error when
/// ||ref||_1 == 0.
double rel_l1_error(const RealField& x, const RealField& ref);
double rel_l1_error(const RealVectorField& x, const RealVectorField& ref);

/// Discrete ||a||^2_{l2} = sum |a|^2 dV.
double mass(const ComplexField& a);

}  // namespace apnls::obs
