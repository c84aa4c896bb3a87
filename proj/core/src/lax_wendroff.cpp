#include "apnls/lax_wendroff.hpp"

#include <cmath>
#include <stdexcept>

namespace apnls::hydro {

void lax_wendroff_sweep(ComplexField& a, RealVectorField& v, double dt, int direction,
                        double epsilon, const Nonlinearity& nl, LaxWendroffVariant variant) {
  const auto& grid = a.grid();
  require_same_grid(grid, v.grid(), "lax_wendroff_sweep");
  const int dim = grid.dim();
  if (direction < 0 || direction >= dim) throw std::invalid_argument("lax_wendroff_sweep: bad direction");
  const int size = dim + 2;
  const std::size_t n = grid.points(direction);
  const std::size_t stride = grid.stride(direction);
  const std::size_t lines = grid.size() / n;
  const double lambda = dt / grid.spacing(direction);

  auto matrix = [&](const StateVector& u) {
    return assemble_matrix(u, size, direction, epsilon, nl);
  };

  std::vector<StateVector> line(n);
  std::vector<StateVector> scratch;
  bool finite = true;
  for (std::size_t l = 0; l < lines; ++l) {
    // In 2D: x-lines start at (0, l), y-lines at (l, 0).
    const std::size_t start = (dim == 1) ? 0 : (direction == 0 ? l : l * n);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t idx = start + k * stride;
      StateVector& u = line[k];
      u[0] = a[idx].real();
      u[1] = a[idx].imag();
      for (int d = 0; d < dim; ++d) u[2 + d] = v[d][idx];
    }
    lax_wendroff_line(line, size, lambda, matrix, variant, scratch);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t idx = start + k * stride;
      const StateVector& u = line[k];
      for (int c = 0; c < size; ++c) finite = finite && std::isfinite(u[c]);
      a[idx] = Complex(u[0], u[1]);
      for (int d = 0; d < dim; ++d) v[d][idx] = u[2 + d];
    }
  }
  if (!finite) throw BlowUpError("lax_wendroff_sweep: non-finite value after update", 0.0);
}

}  // namespace apnls::hydro
