#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "apnls/spectral.hpp"
#include "support/oracles.hpp"

namespace apnls {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Complex> random_values(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Complex> v(n);
  for (auto& z : v) z = Complex(normal(rng), normal(rng));
  return v;
}

double max_diff(std::span<const Complex> a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

TEST(SpectralTest, ForwardMatchesNaiveDft) {
  const auto g = make_grid_1d(0.0, 1.0, 32);
  const auto x = random_values(32, 1);
  ComplexField f(g, x);
  spectral::forward(f.values(), *g);
  EXPECT_LT(max_diff(f.values(), oracle::dft(x)), 1e-12);
  spectral::inverse(f.values(), *g);
  EXPECT_LT(max_diff(f.values(), x), 1e-14);
}

TEST(SpectralTest, TwoDimensionalForwardMatchesNaiveDft) {
  const auto g = make_grid_2d({0.0, 1.0}, {0.0, 2.0}, 8, 16);
  const auto x = random_values(128, 2);
  ComplexField f(g, x);
  spectral::forward(f.values(), *g);
  EXPECT_LT(max_diff(f.values(), oracle::dft2(x, 8, 16)), 1e-12);
}

TEST(SpectralTest, GradientMatchesNaiveMultiplierWithNyquistZeroed) {
  const std::size_t n = 16;
  const double length = 2.0;
  const auto g = make_grid_1d(-0.5, 1.5, n);
  const auto x = random_values(n, 3);
  const auto expected = oracle::apply_multiplier(x, length, [&](double k) {
    const bool nyquist = std::abs(std::abs(k) - kPi * n / length) < 1e-9;
    return nyquist ? Complex(0.0) : Complex(0.0, k);
  });
  const ComplexField d = spectral::gradient(ComplexField(g, x), 0);
  EXPECT_LT(max_diff(d.values(), expected), 1e-12);
}

TEST(SpectralTest, GradientOfTrigonometricPolynomialIsExact) {
  const auto g = make_grid_2d({0.0, 1.0}, {0.0, 1.0}, 32, 32);
  const RealField f = sample_real(g, [](auto x) {
    return std::sin(2 * kPi * x[0]) * std::cos(4 * kPi * x[1]);
  });
  const RealVectorField grad = spectral::gradient(f);
  const RealField lap = spectral::laplacian(f);
  double err = 0.0;
  for (std::size_t i = 0; i < g->size(); ++i) {
    double x[2];
    g->coordinates(i, x);
    err = std::max(err, std::abs(grad[0][i] - 2 * kPi * std::cos(2 * kPi * x[0]) * std::cos(4 * kPi * x[1])));
    err = std::max(err, std::abs(grad[1][i] + 4 * kPi * std::sin(2 * kPi * x[0]) * std::sin(4 * kPi * x[1])));
    err = std::max(err, std::abs(lap[i] + 20 * kPi * kPi * f[i]));
  }
  EXPECT_LT(err, 1e-10);
}

TEST(SpectralTest, DivergenceOfGradientIsLaplacianAndCurlVanishes) {
  const auto g = make_grid_2d({0.0, 1.0}, {0.0, 1.0}, 64, 64);
  const RealField f = sample_real(g, [](auto x) {
    return std::exp(std::sin(2 * kPi * x[0])) * std::cos(2 * kPi * x[1]);
  });
  const RealVectorField grad = spectral::gradient(f);
  const RealField div = spectral::divergence(grad);
  const RealField lap = spectral::laplacian(f);
  const RealField curl = spectral::curl(grad);
  for (std::size_t i = 0; i < g->size(); ++i) {
    EXPECT_NEAR(div[i], lap[i], 1e-9);
    EXPECT_NEAR(curl[i], 0.0, 1e-10);
  }
}

TEST(SpectralTest, SchrodingerPropagatorMatchesNaiveMultiplier) {
  const double eps = 0.05, tau = 0.3, length = 2.0;
  const auto g = make_grid_1d(-0.5, 1.5, 32);
  const auto x = random_values(32, 4);
  const auto expected = oracle::apply_multiplier(
      x, length, [&](double k) { return std::polar(1.0, -eps * k * k * tau / 2.0); });
  const ComplexField out = spectral::schrodinger_propagate(ComplexField(g, x), eps, tau);
  EXPECT_LT(max_diff(out.values(), expected), 1e-12);
}

TEST(SpectralTest, HeatPropagatorMatchesKernelConvolution) {
  const double nu = 1.0, tau = 0.01;
  const auto g = make_grid_1d(0.0, 1.0, 64);
  auto f0 = [](double x) { return std::exp(std::cos(2 * kPi * x)); };
  const RealField out = spectral::heat_propagate(sample_real(g, [&](auto x) { return f0(x[0]); }), nu, tau);
  for (std::size_t j = 0; j < 64; j += 7) {
    EXPECT_NEAR(out[j], oracle::periodic_heat(f0, 1.0, g->node(0, j), nu * tau), 1e-10);
  }
}

TEST(SpectralTest, SchrodingerPreservesL2AndHeatPreservesMean) {
  const auto g = make_grid_1d(0.0, 1.0, 128);
  const auto x = random_values(128, 5);
  const ComplexField u(g, x);
  const ComplexField w = spectral::schrodinger_propagate(u, 0.7, 2.3);
  double n0 = 0.0, n1 = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    n0 += std::norm(u[i]);
    n1 += std::norm(w[i]);
  }
  EXPECT_LT(std::abs(n1 - n0) / n0, 1e-13);

  RealField r(g);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = 3.0 + x[i].real();
  const RealField h = spectral::heat_propagate(r, 0.4, 0.9);
  double m0 = 0.0, m1 = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    m0 += r[i];
    m1 += h[i];
  }
  EXPECT_LT(std::abs(m1 - m0) / std::abs(m0), 1e-13);
}

TEST(SpectralTest, ZeroParametersAreBitwiseIdentity) {
  const auto g = make_grid_1d(0.0, 1.0, 16);
  const ComplexField u(g, random_values(16, 6));
  EXPECT_EQ(spectral::schrodinger_propagate(u, 0.0, 1.0), u);
  EXPECT_EQ(spectral::schrodinger_propagate(u, 1.0, 0.0), u);
  EXPECT_EQ(spectral::heat_propagate(u, 0.0, 1.0), u);
  const RealVectorField v({real_part(u)});
  EXPECT_EQ(spectral::heat_propagate(v, 0.0, 0.5), v);
}

TEST(SpectralTest, NegativeParametersAreRejected) {
  const auto g = make_grid_1d(0.0, 1.0, 16);
  const ComplexField u(g);
  EXPECT_THROW(spectral::heat_propagate(u, -1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(spectral::heat_propagate(u, 1.0, -1.0), std::invalid_argument);
  EXPECT_THROW(spectral::schrodinger_propagate(u, 1.0, -1.0), std::invalid_argument);
}

TEST(SpectralTest, PackedVectorHeatMatchesComponentwise) {
  const auto g = make_grid_2d({0.0, 1.0}, {0.0, 1.0}, 16, 32);
  const auto x = random_values(g->size(), 7);
  const RealVectorField v({real_part(ComplexField(g, x)), imag_part(ComplexField(g, x))});
  const RealVectorField packed = spectral::heat_propagate(v, 0.3, 0.02);
  for (int d = 0; d < 2; ++d) {
    const RealField single = spectral::heat_propagate(v[d], 0.3, 0.02);
    for (std::size_t i = 0; i < g->size(); ++i) EXPECT_NEAR(packed[d][i], single[i], 1e-14);
  }
}

}  // namespace
}  // namespace apnls
