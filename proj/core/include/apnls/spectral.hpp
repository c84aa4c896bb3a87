#pragma once

#include <span>

#include "apnls/field.hpp"

/// Exact Fourier operators on periodic grids.
///
/// Conventions: forward transforms are unnormalized and inverse transforms
/// carry the 1/N factor, so forward followed by inverse is the identity.
/// Derivative multipliers i*k vanish at the Nyquist index of every axis;
/// propagator multipliers use |k|^2 with the Nyquist wavenumber included.
namespace apnls::spectral {

void forward(std::span<Complex> data, const PeriodicGrid& grid);
void inverse(std::span<Complex> data, const PeriodicGrid& grid);

ComplexField gradient(ComplexField field, int axis);
RealField gradient(const RealField& field, int axis);
RealVectorField gradient(const RealField& field);
RealField divergence(const RealVectorField& field);
ComplexField laplacian(ComplexField field);
RealField laplacian(const RealField& field);

/// Spectral d/dx v_2 - d/dy v_1; 2D only.
RealField curl(const RealVectorField& field);

/// Mode k multiplied by exp(-nu |k|^2 tau). Identity (bitwise) when nu*tau == 0.
ComplexField heat_propagate(ComplexField field, double nu, double tau);
RealField heat_propagate(const RealField& field, double nu, double tau);
RealVectorField heat_propagate(const RealVectorField& field, double nu, double tau);

/// Free Schrodinger flow d_t a = i (eps/2) Laplacian a: mode k multiplied by
/// exp(-i eps |k|^2 tau / 2). Identity (bitwise) when eps*tau == 0.
ComplexField schrodinger_propagate(ComplexField field, double eps, double tau);

}  // namespace apnls::spectral
