#pragma once

#include <memory>
#include <string>

#include "apnls/potential.hpp"

namespace apnls {

/// Coupling term of the Schrodinger equation: f(|u|^2) u for the nonlinear
/// variants, V_ext u for the linear one.
class Nonlinearity {
 public:
  enum class Kind { cubic, cubic_quintic, saturated, linear_potential };

  static Nonlinearity cubic();
  /// f(y) = y + lambda y^2, lambda >= 0.
  static Nonlinearity cubic_quintic(double lambda);
  /// f(y) = delta y + eta y / (1 + lambda y), all parameters > 0.
  static Nonlinearity saturated(double delta, double eta, double lambda);
  static Nonlinearity linear_potential(PotentialSpec potential);

  Kind kind() const { return kind_; }
  std::string tag() const;
  bool couples_density() const { return kind_ != Kind::linear_potential; }

  /// f, f' and F(y) = int_0^y f. All zero for the linear variant.
  double f(double y) const;
  double df(double y) const;
  double antiderivative(double y) const;

  /// Lower bound delta of f' on y >= 0 (0 for the linear variant).
  double coercivity() const;

  double lambda() const { return lambda_; }
  double delta() const { return delta_; }
  double eta() const { return eta_; }
  const PotentialSpec& potential() const;

 private:
  Kind kind_ = Kind::cubic;
  double lambda_ = 0.0;
  double delta_ = 1.0;
  double eta_ = 0.0;
  std::shared_ptr<const PotentialSpec> potential_;
};

}  // namespace apnls
