#include "apnls/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "apnls/spectral.hpp"

namespace apnls::obs {
namespace {

template <class T>
Field<T> subsample_impl(const Field<T>& fine, const GridPtr& coarse) {
  const auto& fg = fine.grid();
  if (fg == *coarse) return fine;
  if (!coarse->nests_in(fg)) {
    throw std::invalid_argument("subsample: coarse grid is not nested in the fine grid");
  }
  Field<T> out(coarse);
  const std::size_t s0 = fg.points(0) / coarse->points(0);
  if (coarse->dim() == 1) {
    for (std::size_t i = 0; i < coarse->points(0); ++i) out[i] = fine[i * s0];
    return out;
  }
  const std::size_t s1 = fg.points(1) / coarse->points(1);
  const std::size_t n1 = coarse->points(1);
  const std::size_t f1 = fg.points(1);
  for (std::size_t i = 0; i < coarse->points(0); ++i) {
    for (std::size_t j = 0; j < n1; ++j) out[i * n1 + j] = fine[(i * s0) * f1 + j * s1];
  }
  return out;
}

}  // namespace

ObservableSet observables(const ComplexField& a, const RealVectorField& v, double epsilon) {
  require_same_grid(a.grid(), v.grid(), "observables");
  const auto& grid = a.grid_ptr();
  const int dim = a.grid().dim();
  ObservableSet out{RealField(grid), RealVectorField(grid), RealField(grid)};
  for (std::size_t i = 0; i < a.size(); ++i) out.rho[i] = std::norm(a[i]);
  for (std::size_t i = 0; i < a.size(); ++i) out.energy[i] = out.rho[i] * out.rho[i];
  for (int d = 0; d < dim; ++d) {
    const ComplexField da = spectral::gradient(a, d);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Complex ai = a[i];
      out.current[d][i] = epsilon * (std::conj(ai) * da[i]).imag() + out.rho[i] * v[d][i];
      const Complex w = epsilon * da[i] + Complex(0.0, 1.0) * ai * v[d][i];
      out.energy[i] += std::norm(w);
    }
  }
  return out;
}

ObservableSet wave_observables(const ComplexField& u, double epsilon) {
  return observables(u, RealVectorField(u.grid_ptr()), epsilon);
}

RealField phase_integrand(const ComplexField& a, const RealVectorField& v, double viscosity,
                          const Nonlinearity& nl, double t) {
  require_same_grid(a.grid(), v.grid(), "phase_integrand");
  RealField g(a.grid_ptr());
  if (nl.couples_density()) {
    for (std::size_t i = 0; i < a.size(); ++i) g[i] = nl.f(std::norm(a[i]));
  } else {
    g = nl.potential().sample(a.grid_ptr(), t);
  }
  for (int d = 0; d < v.dim(); ++d) {
    for (std::size_t i = 0; i < a.size(); ++i) g[i] += 0.5 * v[d][i] * v[d][i];
  }
  if (viscosity != 0.0) {
    const RealField div = spectral::divergence(v);
    for (std::size_t i = 0; i < a.size(); ++i) g[i] -= viscosity * div[i];
  }
  return g;
}

void accumulate_phase(RealField& phi, const ComplexField& a, const RealVectorField& v,
                      double epsilon, double dt, const Nonlinearity& nl, double t) {
  require_same_grid(phi.grid(), a.grid(), "accumulate_phase");
  const RealField g = phase_integrand(a, v, epsilon * epsilon, nl, t);
  for (std::size_t i = 0; i < phi.size(); ++i) phi[i] -= dt * g[i];
}

ComplexField reconstruct(const ComplexField& a, const RealField& phi, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("reconstruct: epsilon must be > 0");
  require_same_grid(a.grid(), phi.grid(), "reconstruct");
  ComplexField u(a.grid_ptr());
  for (std::size_t i = 0; i < a.size(); ++i) u[i] = a[i] * std::polar(1.0, phi[i] / epsilon);
  return u;
}

RealField subsample(const RealField& fine, const GridPtr& coarse) {
  return subsample_impl(fine, coarse);
}

ComplexField subsample(const ComplexField& fine, const GridPtr& coarse) {
  return subsample_impl(fine, coarse);
}

RealVectorField subsample(const RealVectorField& fine, const GridPtr& coarse) {
  std::vector<RealField> comps;
  for (int d = 0; d < fine.dim(); ++d) comps.push_back(subsample_impl(fine[d], coarse));
  return RealVectorField(std::move(comps));
}

double l1_norm(const RealField& f) {
  double s = 0.0;
  for (double x : f.values()) s += std::abs(x);
  return s * f.grid().cell_volume();
}

double l1_norm(const RealVectorField& f) {
  double s = 0.0;
  for (int d = 0; d < f.dim(); ++d) {
    for (double x : f[d].values()) s += std::abs(x);
  }
  return s * f.grid().cell_volume();
}

double rel_l1_error(const RealField& x, const RealField& ref) {
  const RealField r = subsample(ref, x.grid_ptr());
  const double denom = l1_norm(r);
  if (!(denom > 0.0)) throw std::domain_error("rel_l1_error: reference has zero l1 norm");
  RealField diff(x.grid_ptr());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = r[i] - x[i];
  return l1_norm(diff) / denom;
}

double rel_l1_error(const RealVectorField& x, const RealVectorField& ref) {
  const RealVectorField r = subsample(ref, x.grid_ptr());
  const double denom = l1_norm(r);
  if (!(denom > 0.0)) throw std::domain_error("rel_l1_error: reference has zero l1 norm");
  RealVectorField diff(x.grid_ptr());
  for (int d = 0; d < x.dim(); ++d) {
    for (std::size_t i = 0; i < x.size(); ++i) diff[d][i] = r[d][i] - x[d][i];
  }
  return l1_norm(diff) / denom;
}

double mass(const ComplexField& a) {
  double s = 0.0;
  for (const auto& z : a.values()) s += std::norm(z);
  return s * a.grid().cell_volume();
}

}  // namespace apnls::obs
