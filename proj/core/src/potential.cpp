#include "apnls/potential.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "apnls/spectral.hpp"

namespace apnls {

PotentialSpec PotentialSpec::zero() { return PotentialSpec{}; }

PotentialSpec PotentialSpec::cosine(double amplitude, int mode) {
  PotentialSpec p;
  p.kind_ = Kind::cosine;
  p.tag_ = "cosine";
  p.amplitude_ = amplitude;
  p.mode_ = mode;
  return p;
}

PotentialSpec PotentialSpec::table(RealField samples) {
  if (!samples.all_finite()) throw std::invalid_argument("potential: non-finite samples");
  PotentialSpec p;
  p.kind_ = Kind::table;
  p.tag_ = "table";
  p.samples_ = std::move(samples);
  return p;
}

PotentialSpec PotentialSpec::custom(std::string tag, Evaluator eval, bool time_dependent) {
  PotentialSpec p;
  p.kind_ = Kind::custom;
  p.tag_ = std::move(tag);
  p.eval_ = std::move(eval);
  p.time_dependent_ = time_dependent;
  return p;
}

RealField PotentialSpec::sample(const GridPtr& grid, double t) const {
  switch (kind_) {
    case Kind::zero:
      return RealField(grid, 0.0);
    case Kind::cosine: {
      const double lo = grid->lower(0);
      const double k = 2.0 * std::numbers::pi * mode_ / grid->length(0);
      return sample_real(grid, [&](std::span<const double> x) {
        return amplitude_ * std::cos(k * (x[0] - lo));
      });
    }
    case Kind::table: {
      const auto& fine = *samples_;
      if (fine.grid() == *grid) return fine;
      if (!grid->nests_in(fine.grid())) {
        throw std::invalid_argument("potential: table grid does not contain the requested grid");
      }
      RealField out(grid);
      const std::size_t s0 = fine.grid().points(0) / grid->points(0);
      if (grid->dim() == 1) {
        for (std::size_t i = 0; i < grid->points(0); ++i) out[i] = fine[i * s0];
      } else {
        const std::size_t s1 = fine.grid().points(1) / grid->points(1);
        const std::size_t n1 = grid->points(1), f1 = fine.grid().points(1);
        for (std::size_t i = 0; i < grid->points(0); ++i) {
          for (std::size_t j = 0; j < n1; ++j) out[i * n1 + j] = fine[i * s0 * f1 + j * s1];
        }
      }
      return out;
    }
    case Kind::custom:
      return sample_real(grid, [&](std::span<const double> x) { return eval_(t, x); });
  }
  return RealField(grid, 0.0);
}

RealVectorField PotentialSpec::gradient(const GridPtr& grid, double t) const {
  if (kind_ == Kind::zero) return RealVectorField(grid);
  return spectral::gradient(sample(grid, t));
}

}  // namespace apnls
