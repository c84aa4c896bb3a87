#pragma once

#include <memory>
#include <stdexcept>

#include "apnls/field.hpp"

namespace apnls {

/// Amplitude a, velocity v and the accumulated phase phi at time t.
struct HydroState {
  ComplexField a;
  RealVectorField v;
  RealField phi;
  double t = 0.0;
  double epsilon = 0.0;

  const GridPtr& grid_ptr() const { return a.grid_ptr(); }
  const PeriodicGrid& grid() const { return a.grid(); }
};

/// Checks shared grid, t >= 0, eps in [0, 1] and finiteness.
void validate(const HydroState& s);

HydroState make_hydro_state(ComplexField a, RealVectorField v, RealField phi, double epsilon,
                            double t = 0.0);

/// Raised when a step produces a non-finite nodal value.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, double time,
              std::shared_ptr<const HydroState> last_valid = nullptr)
      : std::runtime_error(what), time_(time), last_valid_(std::move(last_valid)) {}

  double time() const { return time_; }
  const HydroState* last_valid() const { return last_valid_.get(); }

 private:
  double time_;
  std::shared_ptr<const HydroState> last_valid_;
};

}  // namespace apnls
