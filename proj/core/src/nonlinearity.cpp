#include "apnls/nonlinearity.hpp"

#include <cmath>
#include <stdexcept>

namespace apnls {
namespace {

// Sampled check of f'(y) >= delta > 0 over a logarithmic range of densities.
void check_coercive(const Nonlinearity& nl) {
  const double delta = nl.coercivity();
  for (double y = 0.0; y <= 1e6; y = (y == 0.0 ? 1e-6 : y * 2.0)) {
    if (!(nl.df(y) >= delta) || !(delta > 0.0)) {
      throw std::invalid_argument("nonlinearity: f'(y) >= delta > 0 violated for " + nl.tag());
    }
  }
}

}  // namespace

Nonlinearity Nonlinearity::cubic() { return Nonlinearity{}; }

Nonlinearity Nonlinearity::cubic_quintic(double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("cubic-quintic: lambda must be >= 0");
  Nonlinearity nl;
  nl.kind_ = Kind::cubic_quintic;
  nl.lambda_ = lambda;
  check_coercive(nl);
  return nl;
}

Nonlinearity Nonlinearity::saturated(double delta, double eta, double lambda) {
  if (!(delta > 0.0) || !(eta > 0.0) || !(lambda > 0.0)) {
    throw std::invalid_argument("saturated: delta, eta and lambda must be > 0");
  }
  Nonlinearity nl;
  nl.kind_ = Kind::saturated;
  nl.delta_ = delta;
  nl.eta_ = eta;
  nl.lambda_ = lambda;
  check_coercive(nl);
  return nl;
}

Nonlinearity Nonlinearity::linear_potential(PotentialSpec potential) {
  Nonlinearity nl;
  nl.kind_ = Kind::linear_potential;
  nl.delta_ = 0.0;
  nl.potential_ = std::make_shared<const PotentialSpec>(std::move(potential));
  return nl;
}

std::string Nonlinearity::tag() const {
  switch (kind_) {
    case Kind::cubic: return "cubic";
    case Kind::cubic_quintic: return "cubic-quintic";
    case Kind::saturated: return "saturated";
    case Kind::linear_potential: return "linear-potential";
  }
  return "?";
}

double Nonlinearity::f(double y) const {
  switch (kind_) {
    case Kind::cubic: return y;
    case Kind::cubic_quintic: return y + lambda_ * y * y;
    case Kind::saturated: return delta_ * y + eta_ * y / (1.0 + lambda_ * y);
    case Kind::linear_potential: return 0.0;
  }
  return 0.0;
}

double Nonlinearity::df(double y) const {
  switch (kind_) {
    case Kind::cubic: return 1.0;
    case Kind::cubic_quintic: return 1.0 + 2.0 * lambda_ * y;
    case Kind::saturated: {
      const double q = 1.0 + lambda_ * y;
      return delta_ + eta_ / (q * q);
    }
    case Kind::linear_potential: return 0.0;
  }
  return 0.0;
}

double Nonlinearity::antiderivative(double y) const {
  switch (kind_) {
    case Kind::cubic: return 0.5 * y * y;
    case Kind::cubic_quintic: return 0.5 * y * y + lambda_ * y * y * y / 3.0;
    case Kind::saturated:
      return 0.5 * delta_ * y * y + eta_ / lambda_ * (y - std::log1p(lambda_ * y) / lambda_);
    case Kind::linear_potential: return 0.0;
  }
  return 0.0;
}

double Nonlinearity::coercivity() const {
  switch (kind_) {
    case Kind::cubic:
    case Kind::cubic_quintic: return 1.0;
    case Kind::saturated: return delta_;
    case Kind::linear_potential: return 0.0;
  }
  return 0.0;
}

const PotentialSpec& Nonlinearity::potential() const {
  if (!potential_) throw std::logic_error("nonlinearity: no potential for " + tag());
  return *potential_;
}

}  // namespace apnls
