#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace apnls {

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Rectangular periodic grid in one or two dimensions.
///
/// Node j on axis d sits at lower_d + j * dx_d for j = 0..J_d-1; the right
/// endpoint is identified with the left one. Values are stored row-major,
/// axis 0 outermost.
class PeriodicGrid {
 public:
  PeriodicGrid(std::span<const Interval> bounds,
               std::span<const std::size_t> points);

  int dim() const { return static_cast<int>(axes_.size()); }
  std::size_t size() const { return size_; }

  std::size_t points(int axis) const { return axes_.at(axis).points; }
  double lower(int axis) const { return axes_.at(axis).lower; }
  double length(int axis) const { return axes_.at(axis).length; }
  double upper(int axis) const { return axes_.at(axis).lower + axes_.at(axis).length; }
  double spacing(int axis) const { return axes_.at(axis).spacing; }
  double min_spacing() const;
  double cell_volume() const;

  double node(int axis, std::size_t j) const {
    return axes_[axis].lower + static_cast<double>(j) * axes_[axis].spacing;
  }

  /// Angular wavenumbers 2*pi*m/L in transform order: m = 0, 1, ..., J/2-1,
  /// -J/2, ..., -1.
  const std::vector<double>& wavenumbers(int axis) const {
    return axes_.at(axis).wavenumbers;
  }
  std::size_t nyquist_index(int axis) const { return axes_.at(axis).points / 2; }

  /// Stride between consecutive nodes along `axis` in the flat layout.
  std::size_t stride(int axis) const;

  /// Coordinates of a flat index.
  void coordinates(std::size_t flat, std::span<double> x) const;

  /// True when every node of *this is a node of `fine` (same box, J divides).
  bool nests_in(const PeriodicGrid& fine) const;

  bool operator==(const PeriodicGrid& other) const;

 private:
  struct Axis {
    double lower = 0.0;
    double length = 0.0;
    std::size_t points = 0;
    double spacing = 0.0;
    std::vector<double> wavenumbers;
  };
  std::vector<Axis> axes_;
  std::size_t size_ = 0;
};

using GridPtr = std::shared_ptr<const PeriodicGrid>;

/// Builds a grid; rejects non-power-of-two counts, J < 4, and empty boxes.
GridPtr make_grid(int dim, std::span<const Interval> bounds,
                  std::span<const std::size_t> points);

GridPtr make_grid_1d(double lower, double upper, std::size_t points);
GridPtr make_grid_2d(Interval x, Interval y, std::size_t points_x, std::size_t points_y);

bool is_power_of_two(std::size_t n);

}  // namespace apnls
