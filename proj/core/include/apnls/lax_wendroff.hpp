#pragma once

#include <span>
#include <vector>

#include "apnls/hydro_state.hpp"
#include "apnls/quasilinear.hpp"

namespace apnls::hydro {

enum class LaxWendroffVariant {
  /// Richtmyer predictor at cell faces, corrector with the coefficient
  /// evaluated at the time-centred node state. Second order for nonlinear M(U).
  two_step,
  /// U - (l/2) M_k dU + (l^2/2) M_k [M_{k+1/2} D+U - M_{k-1/2} D-U] with
  /// arithmetic-mean face states. Drops the dM/dt term of U_tt, so it is only
  /// first order in time once M depends on U.
  one_step,
};

/// One Lax-Wendroff update of a periodic line of unknowns for
/// U_t + M(U) U_x = 0 with lambda = dt/dx. `matrix(U)` returns M(U).
template <class MatrixFn>
void lax_wendroff_line(std::span<StateVector> line, int size, double lambda, MatrixFn&& matrix,
                       LaxWendroffVariant variant, std::vector<StateVector>& scratch) {
  const std::size_t n = line.size();
  scratch.resize(n);
  auto sub = [size](const StateVector& x, const StateVector& y) {
    StateVector r{};
    for (int k = 0; k < size; ++k) r[k] = x[k] - y[k];
    return r;
  };
  auto mid = [size](const StateVector& x, const StateVector& y) {
    StateVector r{};
    for (int k = 0; k < size; ++k) r[k] = 0.5 * (x[k] + y[k]);
    return r;
  };

  if (variant == LaxWendroffVariant::two_step) {
    // scratch[k] holds the predicted state at face k+1/2, time n+1/2.
    for (std::size_t k = 0; k < n; ++k) {
      const StateVector& left = line[k];
      const StateVector& right = line[k + 1 == n ? 0 : k + 1];
      const StateVector avg = mid(left, right);
      const StateVector flux = matrix(avg).apply(sub(right, left));
      StateVector h{};
      for (int c = 0; c < size; ++c) h[c] = avg[c] - 0.5 * lambda * flux[c];
      scratch[k] = h;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const StateVector& hr = scratch[k];
      const StateVector& hl = scratch[k == 0 ? n - 1 : k - 1];
      const StateVector update = matrix(mid(hl, hr)).apply(sub(hr, hl));
      for (int c = 0; c < size; ++c) line[k][c] -= lambda * update[c];
    }
    return;
  }

  // one_step: keep the old line in scratch.
  for (std::size_t k = 0; k < n; ++k) scratch[k] = line[k];
  for (std::size_t k = 0; k < n; ++k) {
    const StateVector& u = scratch[k];
    const StateVector& up = scratch[k + 1 == n ? 0 : k + 1];
    const StateVector& um = scratch[k == 0 ? n - 1 : k - 1];
    const auto mk = matrix(u);
    const StateVector centred = mk.apply(sub(up, um));
    const StateVector fr = matrix(mid(u, up)).apply(sub(up, u));
    const StateVector fl = matrix(mid(um, u)).apply(sub(u, um));
    const StateVector second = mk.apply(sub(fr, fl));
    for (int c = 0; c < size; ++c) {
      line[k][c] = u[c] - 0.5 * lambda * centred[c] + 0.5 * lambda * lambda * second[c];
    }
  }
}

/// Lax-Wendroff update of (a, v) over dt along `direction`, every grid line.
/// Throws BlowUpError on a non-finite result.
void lax_wendroff_sweep(ComplexField& a, RealVectorField& v, double dt, int direction,
                        double epsilon, const Nonlinearity& nl,
                        LaxWendroffVariant variant = LaxWendroffVariant::two_step);

}  // namespace apnls::hydro
