#pragma once

#include "apnls/hydro_state.hpp"
#include "apnls/lax_wendroff.hpp"
#include "apnls/nonlinearity.hpp"

namespace apnls::hydro {

inline constexpr double kDefaultCfl = 0.8;
inline constexpr double kDefaultDtMax = 1e-2;

/// Ordering of the directional sweeps inside the transport substep (2D only).
enum class SweepOrder {
  /// Average of the x(dt/2) y(dt) x(dt/2) and y(dt/2) x(dt) y(dt/2) results;
  /// commutes with swapping the axes on a square grid.
  symmetric_average,
  /// x(dt/2) y(dt) x(dt/2) only.
  xyx,
};

struct SchemeOptions {
  LaxWendroffVariant lax_wendroff = LaxWendroffVariant::two_step;
  SweepOrder sweep_order = SweepOrder::symmetric_average;
};

/// Transport substep over dt: Lax-Wendroff in every direction; for the linear
/// variant wrapped by two half kicks v -= dt/2 grad V(t + dt/2).
void transport_substep(HydroState& s, double dt, const Nonlinearity& nl,
                       const SchemeOptions& options = {});

/// Strang composition with an explicit velocity viscosity:
/// [free Schrodinger on a, heat(viscosity) on v](dt/2), transport(dt), repeat
/// the first substep. Advances s.t by dt; leaves s.phi untouched.
void split_step(HydroState& s, double dt, double viscosity, const Nonlinearity& nl,
                const SchemeOptions& options = {});

/// One step of the asymptotic-preserving scheme (viscosity eps^2).
HydroState strang_step(HydroState s, double dt, const Nonlinearity& nl,
                       const SchemeOptions& options = {});

/// cfl * min dx / max_nodes(max_d |v_d| + |a|); dt_max when the speed is < 1e-14.
double cfl_dt(const HydroState& s, double cfl = kDefaultCfl, double dt_max = kDefaultDtMax);

/// Same rule with the sound speed |a| sqrt(f'(|a|^2)) of the coupling term;
/// identical to the plain rule for the cubic case and |v| alone for the
/// linear variant.
double cfl_dt(const HydroState& s, const Nonlinearity& nl, double cfl = kDefaultCfl,
              double dt_max = kDefaultDtMax);

}  // namespace apnls::hydro
