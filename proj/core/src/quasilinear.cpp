#include "apnls/quasilinear.hpp"

#include <stdexcept>

namespace apnls::hydro {

StateVector QuasilinearMatrix::apply(const StateVector& x) const {
  StateVector y{};
  for (int r = 0; r < size; ++r) {
    double acc = 0.0;
    for (int c = 0; c < size; ++c) acc += m[r][c] * x[c];
    y[r] = acc;
  }
  return y;
}

QuasilinearMatrix assemble_matrix(const StateVector& U, int size, int direction, double epsilon,
                                  const Nonlinearity& nl) {
  QuasilinearMatrix M;
  M.size = size;
  const int c = direction + 2;
  const double speed = U[c];
  for (int k = 0; k < size; ++k) M.m[k][k] = speed;
  M.m[0][c] = 0.5 * U[0] - epsilon * U[1];
  M.m[1][c] = 0.5 * U[1] + epsilon * U[0];
  if (nl.couples_density()) {
    const double p = 2.0 * nl.df(U[0] * U[0] + U[1] * U[1]);
    M.m[c][0] = p * U[0];
    M.m[c][1] = p * U[1];
  }
  return M;
}

QuasilinearMatrix assemble_matrix(std::span<const double> U, int direction, double epsilon,
                                  const Nonlinearity& nl) {
  const int size = static_cast<int>(U.size());
  if (size < 3 || size > kMaxUnknowns || direction < 0 || direction >= size - 2) {
    throw std::invalid_argument("assemble_matrix: need d+2 unknowns and direction < d");
  }
  StateVector u{};
  for (int k = 0; k < size; ++k) u[k] = U[k];
  return assemble_matrix(u, size, direction, epsilon, nl);
}

}  // namespace apnls::hydro
