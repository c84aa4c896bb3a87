#include "apnls/hydro_state.hpp"

namespace apnls {

void validate(const HydroState& s) {
  require_same_grid(s.a.grid(), s.v.grid(), "hydro state (a, v)");
  require_same_grid(s.a.grid(), s.phi.grid(), "hydro state (a, phi)");
  if (!(s.t >= 0.0)) throw std::invalid_argument("hydro state: t must be >= 0");
  if (!(s.epsilon >= 0.0 && s.epsilon <= 1.0)) {
    throw std::invalid_argument("hydro state: epsilon must lie in [0, 1]");
  }
  if (!s.a.all_finite() || !s.v.all_finite() || !s.phi.all_finite()) {
    throw std::invalid_argument("hydro state: non-finite values");
  }
}

HydroState make_hydro_state(ComplexField a, RealVectorField v, RealField phi, double epsilon,
                            double t) {
  HydroState s{std::move(a), std::move(v), std::move(phi), t, epsilon};
  validate(s);
  return s;
}

}  // namespace apnls
