#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oracle {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<cplx> dft_impl(const std::vector<cplx>& x, double sign) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = sign * 2.0 * kPi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      s += x[j] * std::polar(1.0, angle);
    }
    out[k] = s;
  }
  return out;
}

std::vector<cplx> dft2_impl(const std::vector<cplx>& x, std::size_t nx, std::size_t ny, double sign) {
  std::vector<cplx> tmp(x.size());
  for (std::size_t i = 0; i < nx; ++i) {
    std::vector<cplx> row(x.begin() + i * ny, x.begin() + (i + 1) * ny);
    row = dft_impl(row, sign);
    for (std::size_t j = 0; j < ny; ++j) tmp[i * ny + j] = row[j];
  }
  std::vector<cplx> out(x.size());
  for (std::size_t j = 0; j < ny; ++j) {
    std::vector<cplx> col(nx);
    for (std::size_t i = 0; i < nx; ++i) col[i] = tmp[i * ny + j];
    col = dft_impl(col, sign);
    for (std::size_t i = 0; i < nx; ++i) out[i * ny + j] = col[i];
  }
  return out;
}

}  // namespace

std::vector<cplx> dft(const std::vector<cplx>& x) { return dft_impl(x, -1.0); }

std::vector<cplx> idft(const std::vector<cplx>& x) {
  auto out = dft_impl(x, 1.0);
  for (auto& z : out) z /= static_cast<double>(x.size());
  return out;
}

std::vector<cplx> dft2(const std::vector<cplx>& x, std::size_t nx, std::size_t ny) {
  return dft2_impl(x, nx, ny, -1.0);
}

std::vector<cplx> idft2(const std::vector<cplx>& x, std::size_t nx, std::size_t ny) {
  auto out = dft2_impl(x, nx, ny, 1.0);
  for (auto& z : out) z /= static_cast<double>(x.size());
  return out;
}

int mode(std::size_t j, std::size_t n) {
  return j < n / 2 ? static_cast<int>(j) : static_cast<int>(j) - static_cast<int>(n);
}

std::vector<cplx> apply_multiplier(const std::vector<cplx>& x, double length,
                                   const std::function<cplx(double)>& m) {
  auto hat = dft(x);
  for (std::size_t j = 0; j < hat.size(); ++j) hat[j] *= m(2.0 * kPi * mode(j, x.size()) / length);
  return idft(hat);
}

double d1_central4(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

cplx lax_wendroff_gain(double nu, double theta) {
  return cplx(1.0 - nu * nu * (1.0 - std::cos(theta)), -nu * std::sin(theta));
}

double observed_order(double e1, double e2, double h1, double h2) {
  return std::log(e1 / e2) / std::log(h1 / h2);
}

double fitted_order(const std::vector<double>& h, const std::vector<double>& e) {
  const double n = static_cast<double>(h.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double x = std::log(h[i]), y = std::log(e[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

double foot(const std::function<double(double)>& v0, const std::function<double(double)>& dv0,
            double x, double t) {
  double x0 = x - v0(x) * t;
  for (int it = 0; it < 100; ++it) {
    const double g = x0 + v0(x0) * t - x;
    const double step = g / (1.0 + dv0(x0) * t);
    x0 -= step;
    if (std::abs(step) < 1e-15) break;
  }
  return x0;
}

}  // namespace

double burgers_characteristics(const std::function<double(double)>& v0,
                               const std::function<double(double)>& dv0, double x, double t) {
  return v0(foot(v0, dv0, x, t));
}

double continuity_characteristics(const std::function<double(double)>& v0,
                                  const std::function<double(double)>& dv0,
                                  const std::function<double(double)>& rho0, double x, double t) {
  const double x0 = foot(v0, dv0, x, t);
  return rho0(x0) / (1.0 + dv0(x0) * t);
}

double periodic_heat(const std::function<double(double)>& f0, double length, double x, double t,
                     int quadrature_points) {
  if (!(t > 0.0)) return f0(x);
  const double h = length / quadrature_points;
  const double width = std::sqrt(4.0 * t);
  double sum = 0.0;
  for (int q = 0; q < quadrature_points; ++q) {
    const double y = q * h;
    double kernel = 0.0;
    for (int image = -6; image <= 6; ++image) {
      const double d = x - y + image * length;
      kernel += std::exp(-d * d / (width * width));
    }
    sum += f0(y) * kernel;
  }
  return sum * h / std::sqrt(4.0 * kPi * t);
}

}  // namespace oracle
