#include "apnls/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace apnls {

template <class T>
Field<T>::Field(GridPtr grid, std::vector<T> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_->size()) {
    throw std::invalid_argument("field: value count " + std::to_string(values_.size()) +
                                " does not match grid size " + std::to_string(grid_->size()));
  }
}

template <class T>
bool Field<T>::all_finite() const {
  for (const auto& x : values_) {
    if constexpr (std::is_same_v<T, Complex>) {
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    } else {
      if (!std::isfinite(x)) return false;
    }
  }
  return true;
}

template class Field<Complex>;
template class Field<double>;

RealVectorField::RealVectorField(GridPtr grid) {
  const int d = grid->dim();
  components_.reserve(d);
  for (int i = 0; i < d; ++i) components_.emplace_back(grid);
}

RealVectorField::RealVectorField(std::vector<RealField> components)
    : components_(std::move(components)) {
  if (components_.empty() ||
      static_cast<int>(components_.size()) != components_.front().grid().dim()) {
    throw std::invalid_argument("vector field: component count must equal grid dimension");
  }
  for (const auto& c : components_) {
    require_same_grid(c.grid(), components_.front().grid(), "vector field components");
  }
}

bool RealVectorField::all_finite() const {
  for (const auto& c : components_) {
    if (!c.all_finite()) return false;
  }
  return true;
}

void require_same_grid(const PeriodicGrid& a, const PeriodicGrid& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": grids differ");
}

RealField real_part(const ComplexField& f) {
  RealField out(f.grid_ptr());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].real();
  return out;
}

RealField imag_part(const ComplexField& f) {
  RealField out(f.grid_ptr());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].imag();
  return out;
}

ComplexField to_complex(const RealField& f) {
  ComplexField out(f.grid_ptr());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  return out;
}

}  // namespace apnls
