#pragma once

#include <array>
#include <span>

#include "apnls/nonlinearity.hpp"

namespace apnls::hydro {

inline constexpr int kMaxUnknowns = 4;

/// Nodal unknown (Re a, Im a, v_1, ..., v_d); only the first d+2 entries are used.
using StateVector = std::array<double, kMaxUnknowns>;

/// M^j(U) = A^j(U) - eps B^j(U), the coefficient of d_j U in the transport
/// part of the hydrodynamic system written as U_t + sum_j M^j(U) d_j U = 0.
///
/// Nonzero entries for direction j (0-based, c = j + 2):
///   M[k][k] = U[c]
///   M[0][c] = U[0]/2 - eps U[1],   M[1][c] = U[1]/2 + eps U[0]
///   M[c][0] = 2 f'(|a|^2) U[0],    M[c][1] = 2 f'(|a|^2) U[1]
/// The pressure entries vanish for the linear-potential variant.
struct QuasilinearMatrix {
  int size = 0;
  std::array<std::array<double, kMaxUnknowns>, kMaxUnknowns> m{};

  double operator()(int row, int col) const { return m[row][col]; }
  StateVector apply(const StateVector& x) const;
};

QuasilinearMatrix assemble_matrix(std::span<const double> U, int direction, double epsilon,
                                  const Nonlinearity& nl);

QuasilinearMatrix assemble_matrix(const StateVector& U, int size, int direction, double epsilon,
                                  const Nonlinearity& nl);

}  // namespace apnls::hydro
