#include "apnls/harness/initial_data.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <span>

#include "apnls/observables.hpp"
#include "apnls/snapshot.hpp"
#include "apnls/spectral.hpp"

namespace apnls::harness {
namespace {

constexpr double kCenter = 0.5;
constexpr double kTheta1 = 0.05;
constexpr double kTheta2 = 0.015;

std::array<double, 2> coords(const PeriodicGrid& g, std::size_t flat) {
  std::array<double, 2> x{};
  g.coordinates(flat, std::span<double>(x.data(), g.dim()));
  return x;
}

// ln cosh(z) without overflow for large |z|.
double log_cosh(double z) {
  const double a = std::abs(z);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

InitialFields gauss_logcosh_1d(const GridPtr& grid) {
  InitialFields f{ComplexField(grid), RealVectorField(grid), RealField(grid)};
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double s = coords(*grid, i)[0] - kCenter;
    f.a[i] = std::exp(-25.0 * s * s);
    f.v[0][i] = -std::tanh(5.0 * s);
    f.phi[i] = -0.2 * log_cosh(5.0 * s);
  }
  return f;
}

InitialFields gauss_logcosh_2d(const GridPtr& grid) {
  InitialFields f{ComplexField(grid), RealVectorField(grid), RealField(grid)};
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const auto x = coords(*grid, i);
    const double dx = x[0] - kCenter;
    const double dy = x[1] - kCenter;
    const double r = std::hypot(dx, dy);
    f.a[i] = std::exp(-25.0 * r * r);
    f.phi[i] = -0.2 * log_cosh(5.0 * r);
    if (r > 0.0) {
      const double speed = -std::tanh(5.0 * r) / r;
      f.v[0][i] = speed * dx;
      f.v[1][i] = speed * dy;
    }
  }
  return f;
}

InitialFields maxwell_2temp(const GridPtr& grid) {
  InitialFields f{ComplexField(grid), RealVectorField(grid), RealField(grid)};
  const double peak = 0.5 / (2.0 * std::numbers::pi * std::sqrt(kTheta1) * std::sqrt(kTheta2));
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const auto x = coords(*grid, i);
    const double dx = x[0] - kCenter;
    const double dy = x[1] - kCenter;
    f.a[i] = peak * std::exp(-dx * dx / (2.0 * kTheta1) - dy * dy / (2.0 * kTheta2));
  }
  return f;
}

InitialFields cosine_phase(const GridPtr& grid, double amplitude) {
  InitialFields f{ComplexField(grid, Complex(amplitude, 0.0)), RealVectorField(grid), RealField(grid)};
  const double k = 2.0 * std::numbers::pi / grid->length(0);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double z = k * (coords(*grid, i)[0] - grid->lower(0));
    f.phi[i] = std::cos(z);
    f.v[0][i] = -k * std::sin(z);
  }
  return f;
}

template <class F>
F restrict_to(F fine, const GridPtr& grid, const char* what) {
  if (fine.grid() == *grid) return fine;
  if (!grid->nests_in(fine.grid())) {
    throw ConfigError(std::string("initial data: ") + what + " snapshot grid does not contain the run grid");
  }
  return obs::subsample(fine, grid);
}

InitialFields custom_snapshot(const InitialConfig& config, const GridPtr& grid) {
  InitialFields f{ComplexField(grid), RealVectorField(grid), RealField(grid)};
  try {
    f.a = restrict_to(complex_field(load_snapshot(config.path)), grid, "amplitude");
    if (!config.phase_path.empty()) {
      const RealField phi = real_field(load_snapshot(config.phase_path));
      f.v = restrict_to(spectral::gradient(phi), grid, "phase");
      f.phi = restrict_to(phi, grid, "phase");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("initial data: ") + e.what());
  }
  return f;
}

}  // namespace

InitialFields build_initial(const InitialConfig& config, const GridPtr& grid) {
  const std::string& tag = config.tag;
  if (tag == "gauss-logcosh-1d") {
    if (grid->dim() != 1) throw ConfigError("initial data: gauss-logcosh-1d needs a 1D grid");
    return gauss_logcosh_1d(grid);
  }
  if (tag == "gauss-logcosh-2d") {
    if (grid->dim() != 2) throw ConfigError("initial data: gauss-logcosh-2d needs a 2D grid");
    return gauss_logcosh_2d(grid);
  }
  if (tag == "maxwell-2temp") {
    if (grid->dim() != 2) throw ConfigError("initial data: maxwell-2temp needs a 2D grid");
    return maxwell_2temp(grid);
  }
  if (tag == "plane-wave") {
    return {ComplexField(grid, Complex(config.amplitude, 0.0)), RealVectorField(grid), RealField(grid)};
  }
  if (tag == "cosine-phase") return cosine_phase(grid, config.amplitude);
  if (tag == "custom-snapshot") return custom_snapshot(config, grid);
  throw ConfigError("initial data: unknown tag '" + tag + "'");
}

HydroState build_hydro_state(const InitialConfig& config, const GridPtr& grid, double epsilon) {
  InitialFields f = build_initial(config, grid);
  return make_hydro_state(std::move(f.a), std::move(f.v), std::move(f.phi), epsilon);
}

nls::WaveState build_wave_state(const InitialConfig& config, const GridPtr& grid, double epsilon) {
  if (!(epsilon > 0.0)) throw ConfigError("initial data: wave functions need epsilon > 0");
  const InitialFields f = build_initial(config, grid);
  nls::WaveState s{obs::reconstruct(f.a, f.phi, epsilon), 0.0, epsilon};
  nls::validate(s);
  return s;
}

}  // namespace apnls::harness
