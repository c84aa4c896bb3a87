#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "apnls/field.hpp"

namespace apnls {

/// Real external potential V_ext(t, x) on a periodic grid.
class PotentialSpec {
 public:
  using Evaluator = std::function<double(double t, std::span<const double> x)>;

  static PotentialSpec zero();
  /// amplitude * cos(2 pi mode (x - lower) / L) along axis 0; static.
  static PotentialSpec cosine(double amplitude, int mode = 1);
  /// Static nodal samples; usable on the sampled grid or on any grid nested in it.
  static PotentialSpec table(RealField samples);
  /// Arbitrary evaluator; must be periodic on the grids it is used with.
  static PotentialSpec custom(std::string tag, Evaluator eval, bool time_dependent);

  const std::string& tag() const { return tag_; }
  bool is_zero() const { return kind_ == Kind::zero; }
  bool time_dependent() const { return time_dependent_; }
  double amplitude() const { return amplitude_; }
  int mode() const { return mode_; }

  RealField sample(const GridPtr& grid, double t) const;
  /// Spectral gradient of the nodal samples.
  RealVectorField gradient(const GridPtr& grid, double t) const;

 private:
  enum class Kind { zero, cosine, table, custom };
  Kind kind_ = Kind::zero;
  std::string tag_ = "zero";
  double amplitude_ = 0.0;
  int mode_ = 1;
  bool time_dependent_ = false;
  std::optional<RealField> samples_;
  Evaluator eval_;
};

}  // namespace apnls
