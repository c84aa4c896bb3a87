#pragma once

#include <complex>
#include <span>
#include <vector>

#include "apnls/grid.hpp"

namespace apnls {

using Complex = std::complex<double>;

/// Nodal values of type T on a periodic grid.
template <class T>
class Field {
 public:
  Field() = default;
  explicit Field(GridPtr grid, T fill = T{})
      : grid_(std::move(grid)), values_(grid_->size(), fill) {}
  Field(GridPtr grid, std::vector<T> values);

  const GridPtr& grid_ptr() const { return grid_; }
  const PeriodicGrid& grid() const { return *grid_; }
  std::size_t size() const { return values_.size(); }

  std::span<T> values() { return values_; }
  std::span<const T> values() const { return values_; }
  T& operator[](std::size_t i) { return values_[i]; }
  const T& operator[](std::size_t i) const { return values_[i]; }

  bool all_finite() const;

  friend bool operator==(const Field& a, const Field& b) {
    return *a.grid_ == *b.grid_ && a.values_ == b.values_;
  }

 private:
  GridPtr grid_;
  std::vector<T> values_;
};

using ComplexField = Field<Complex>;
using RealField = Field<double>;

/// d real component fields, d equal to the grid dimension.
class RealVectorField {
 public:
  RealVectorField() = default;
  explicit RealVectorField(GridPtr grid);
  explicit RealVectorField(std::vector<RealField> components);

  const GridPtr& grid_ptr() const { return components_.front().grid_ptr(); }
  const PeriodicGrid& grid() const { return components_.front().grid(); }
  int dim() const { return static_cast<int>(components_.size()); }
  std::size_t size() const { return components_.front().size(); }

  RealField& operator[](int d) { return components_[d]; }
  const RealField& operator[](int d) const { return components_[d]; }

  bool all_finite() const;

  friend bool operator==(const RealVectorField&, const RealVectorField&) = default;

 private:
  std::vector<RealField> components_;
};

/// Throws std::invalid_argument unless both grids describe the same nodes.
void require_same_grid(const PeriodicGrid& a, const PeriodicGrid& b, const char* what);

RealField real_part(const ComplexField& f);
RealField imag_part(const ComplexField& f);
ComplexField to_complex(const RealField& f);

/// Samples fn(x) at every node; x has grid.dim() entries.
template <class Fn>
RealField sample_real(const GridPtr& grid, Fn&& fn) {
  RealField out(grid);
  double x[2] = {0.0, 0.0};
  for (std::size_t i = 0; i < grid->size(); ++i) {
    grid->coordinates(i, std::span(x, grid->dim()));
    out[i] = fn(std::span<const double>(x, grid->dim()));
  }
  return out;
}

template <class Fn>
ComplexField sample_complex(const GridPtr& grid, Fn&& fn) {
  ComplexField out(grid);
  double x[2] = {0.0, 0.0};
  for (std::size_t i = 0; i < grid->size(); ++i) {
    grid->coordinates(i, std::span(x, grid->dim()));
    out[i] = fn(std::span<const double>(x, grid->dim()));
  }
  return out;
}

}  // namespace apnls
