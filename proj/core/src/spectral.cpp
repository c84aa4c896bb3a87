#include "apnls/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace apnls::spectral {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// Planning is not thread-safe in FFTW; executing an existing plan on new
// arrays is. Plans live for the process lifetime.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  PlanPair get(const PeriodicGrid& grid) {
    std::vector<int> dims;
    for (int d = 0; d < grid.dim(); ++d) dims.push_back(static_cast<int>(grid.points(d)));
    std::lock_guard lock(mutex_);
    auto it = plans_.find(dims);
    if (it != plans_.end()) return it->second;
    std::vector<Complex> scratch(grid.size());
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p;
    p.forward = fftw_plan_dft(grid.dim(), dims.data(), buf, buf, FFTW_FORWARD, flags);
    p.backward = fftw_plan_dft(grid.dim(), dims.data(), buf, buf, FFTW_BACKWARD, flags);
    if (p.forward == nullptr || p.backward == nullptr) {
      throw std::runtime_error("spectral: FFTW planning failed");
    }
    plans_.emplace(dims, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<std::vector<int>, PlanPair> plans_;
};

void check_size(std::span<Complex> data, const PeriodicGrid& grid) {
  if (data.size() != grid.size()) throw std::invalid_argument("spectral: data size mismatch");
}

// Calls fn(flat_index, k0, k1, nyquist_on_axis0, nyquist_on_axis1).
template <class Fn>
void for_each_mode(const PeriodicGrid& grid, Fn&& fn) {
  const auto& k0 = grid.wavenumbers(0);
  const std::size_t n0 = grid.points(0);
  const std::size_t ny0 = grid.nyquist_index(0);
  if (grid.dim() == 1) {
    for (std::size_t i = 0; i < n0; ++i) fn(i, k0[i], 0.0, i == ny0, false);
    return;
  }
  const auto& k1 = grid.wavenumbers(1);
  const std::size_t n1 = grid.points(1);
  const std::size_t ny1 = grid.nyquist_index(1);
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = 0; j < n1; ++j) fn(i * n1 + j, k0[i], k1[j], i == ny0, j == ny1);
  }
}

void check_axis(const PeriodicGrid& grid, int axis) {
  if (axis < 0 || axis >= grid.dim()) throw std::invalid_argument("spectral: axis out of range");
}

// Packs two real fields into one complex transform; valid for multipliers
// that map real fields to real fields.
template <class Op>
std::pair<RealField, RealField> apply_real_pair(const RealField& x, const RealField& y, Op&& op) {
  ComplexField packed(x.grid_ptr());
  for (std::size_t i = 0; i < x.size(); ++i) packed[i] = Complex(x[i], y[i]);
  packed = op(std::move(packed));
  return {real_part(packed), imag_part(packed)};
}

}  // namespace

void forward(std::span<Complex> data, const PeriodicGrid& grid) {
  check_size(data, grid);
  const auto plans = PlanCache::instance().get(grid);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans.forward, buf, buf);
}

void inverse(std::span<Complex> data, const PeriodicGrid& grid) {
  check_size(data, grid);
  const auto plans = PlanCache::instance().get(grid);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans.backward, buf, buf);
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (auto& z : data) z *= scale;
}

ComplexField gradient(ComplexField field, int axis) {
  const auto& grid = field.grid();
  check_axis(grid, axis);
  auto data = field.values();
  forward(data, grid);
  for_each_mode(grid, [&](std::size_t i, double k0, double k1, bool nyq0, bool nyq1) {
    const double k = axis == 0 ? k0 : k1;
    const bool nyquist = axis == 0 ? nyq0 : nyq1;
    data[i] = nyquist ? Complex(0.0, 0.0) : Complex(-k * data[i].imag(), k * data[i].real());
  });
  inverse(data, grid);
  return field;
}

RealField gradient(const RealField& field, int axis) {
  return real_part(gradient(to_complex(field), axis));
}

RealVectorField gradient(const RealField& field) {
  std::vector<RealField> comps;
  for (int d = 0; d < field.grid().dim(); ++d) comps.push_back(gradient(field, d));
  return RealVectorField(std::move(comps));
}

RealField divergence(const RealVectorField& field) {
  RealField out = gradient(field[0], 0);
  for (int d = 1; d < field.dim(); ++d) {
    const RealField g = gradient(field[d], d);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += g[i];
  }
  return out;
}

ComplexField laplacian(ComplexField field) {
  const auto& grid = field.grid();
  auto data = field.values();
  forward(data, grid);
  for_each_mode(grid, [&](std::size_t i, double k0, double k1, bool, bool) {
    data[i] *= -(k0 * k0 + k1 * k1);
  });
  inverse(data, grid);
  return field;
}

RealField laplacian(const RealField& field) { return real_part(laplacian(to_complex(field))); }

RealField curl(const RealVectorField& field) {
  if (field.dim() != 2) throw std::invalid_argument("spectral: curl needs a 2D field");
  RealField out = gradient(field[1], 0);
  const RealField dy = gradient(field[0], 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= dy[i];
  return out;
}

ComplexField heat_propagate(ComplexField field, double nu, double tau) {
  if (nu < 0.0 || tau < 0.0) throw std::invalid_argument("heat_propagate: nu and tau must be >= 0");
  if (nu * tau == 0.0) return field;
  const auto& grid = field.grid();
  auto data = field.values();
  forward(data, grid);
  for_each_mode(grid, [&](std::size_t i, double k0, double k1, bool, bool) {
    data[i] *= std::exp(-nu * (k0 * k0 + k1 * k1) * tau);
  });
  inverse(data, grid);
  return field;
}

RealField heat_propagate(const RealField& field, double nu, double tau) {
  if (nu < 0.0 || tau < 0.0) throw std::invalid_argument("heat_propagate: nu and tau must be >= 0");
  if (nu * tau == 0.0) return field;
  return real_part(heat_propagate(to_complex(field), nu, tau));
}

RealVectorField heat_propagate(const RealVectorField& field, double nu, double tau) {
  if (nu < 0.0 || tau < 0.0) throw std::invalid_argument("heat_propagate: nu and tau must be >= 0");
  if (nu * tau == 0.0) return field;
  if (field.dim() == 1) return RealVectorField({heat_propagate(field[0], nu, tau)});
  auto [x, y] = apply_real_pair(field[0], field[1], [&](ComplexField f) {
    return heat_propagate(std::move(f), nu, tau);
  });
  return RealVectorField({std::move(x), std::move(y)});
}

ComplexField schrodinger_propagate(ComplexField field, double eps, double tau) {
  if (eps < 0.0 || tau < 0.0) {
    throw std::invalid_argument("schrodinger_propagate: eps and tau must be >= 0");
  }
  if (eps * tau == 0.0) return field;
  const auto& grid = field.grid();
  auto data = field.values();
  forward(data, grid);
  for_each_mode(grid, [&](std::size_t i, double k0, double k1, bool, bool) {
    const double angle = -0.5 * eps * (k0 * k0 + k1 * k1) * tau;
    data[i] *= Complex(std::cos(angle), std::sin(angle));
  });
  inverse(data, grid);
  return field;
}

}  // namespace apnls::spectral
