#include "apnls/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace apnls {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

PeriodicGrid::PeriodicGrid(std::span<const Interval> bounds,
                           std::span<const std::size_t> points) {
  if (bounds.size() != points.size() || bounds.empty() || bounds.size() > 2) {
    throw std::invalid_argument("grid: dimension must be 1 or 2 with matching bounds and point counts");
  }
  size_ = 1;
  for (std::size_t d = 0; d < bounds.size(); ++d) {
    const std::size_t n = points[d];
    if (n < 4 || !is_power_of_two(n)) {
      throw std::invalid_argument("grid: point count " + std::to_string(n) +
                                  " is not a power of two >= 4");
    }
    const double len = bounds[d].upper - bounds[d].lower;
    if (!(len > 0.0) || !std::isfinite(len)) {
      throw std::invalid_argument("grid: axis length must be positive");
    }
    Axis axis;
    axis.lower = bounds[d].lower;
    axis.length = len;
    axis.points = n;
    axis.spacing = len / static_cast<double>(n);
    axis.wavenumbers.resize(n);
    const auto half = static_cast<long>(n / 2);
    for (std::size_t j = 0; j < n; ++j) {
      const long mode = static_cast<long>(j) < half ? static_cast<long>(j)
                                                    : static_cast<long>(j) - static_cast<long>(n);
      axis.wavenumbers[j] = 2.0 * std::numbers::pi * static_cast<double>(mode) / len;
    }
    size_ *= n;
    axes_.push_back(std::move(axis));
  }
}

double PeriodicGrid::min_spacing() const {
  double h = axes_.front().spacing;
  for (const auto& a : axes_) h = std::min(h, a.spacing);
  return h;
}

double PeriodicGrid::cell_volume() const {
  double v = 1.0;
  for (const auto& a : axes_) v *= a.spacing;
  return v;
}

std::size_t PeriodicGrid::stride(int axis) const {
  std::size_t s = 1;
  for (int d = dim() - 1; d > axis; --d) s *= axes_[d].points;
  return s;
}

void PeriodicGrid::coordinates(std::size_t flat, std::span<double> x) const {
  for (int d = dim() - 1; d >= 0; --d) {
    const std::size_t n = axes_[d].points;
    x[d] = node(d, flat % n);
    flat /= n;
  }
}

bool PeriodicGrid::nests_in(const PeriodicGrid& fine) const {
  if (fine.dim() != dim()) return false;
  for (int d = 0; d < dim(); ++d) {
    const auto& c = axes_[d];
    const auto& f = fine.axes_[d];
    if (c.lower != f.lower || c.length != f.length) return false;
    if (f.points < c.points || f.points % c.points != 0) return false;
  }
  return true;
}

bool PeriodicGrid::operator==(const PeriodicGrid& other) const {
  if (dim() != other.dim()) return false;
  for (int d = 0; d < dim(); ++d) {
    if (axes_[d].lower != other.axes_[d].lower || axes_[d].length != other.axes_[d].length ||
        axes_[d].points != other.axes_[d].points) {
      return false;
    }
  }
  return true;
}

GridPtr make_grid(int dim, std::span<const Interval> bounds,
                  std::span<const std::size_t> points) {
  if (dim != static_cast<int>(bounds.size())) {
    throw std::invalid_argument("grid: dim does not match the number of bounds");
  }
  return std::make_shared<const PeriodicGrid>(bounds, points);
}

GridPtr make_grid_1d(double lower, double upper, std::size_t points) {
  const Interval b{lower, upper};
  return make_grid(1, std::span(&b, 1), std::span(&points, 1));
}

GridPtr make_grid_2d(Interval x, Interval y, std::size_t points_x, std::size_t points_y) {
  const Interval b[2] = {x, y};
  const std::size_t p[2] = {points_x, points_y};
  return make_grid(2, b, p);
}

}  // namespace apnls
