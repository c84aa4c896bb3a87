#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "apnls/eikonal.hpp"
#include "apnls/spectral.hpp"
#include "support/oracles.hpp"

namespace apnls::eikonal {
namespace {

constexpr double kPi = std::numbers::pi;

RealField cosine_phase(const GridPtr& g, double amp = 1.0) {
  return sample_real(g, [&](auto x) { return amp * std::cos(2 * kPi * x[0]); });
}

TEST(EikonalTest, ColeHopfOracleSolvesViscousEikonal) {
  const auto g = make_grid_1d(0.0, 1.0, 128);
  const RealField phi0 = cosine_phase(g);
  const double t = 0.05, h = 1e-4;
  const RealField phi = cole_hopf_oracle(phi0, t);
  const RealField pp = cole_hopf_oracle(phi0, t + h), p2 = cole_hopf_oracle(phi0, t + 2 * h);
  const RealField pm = cole_hopf_oracle(phi0, t - h), m2 = cole_hopf_oracle(phi0, t - 2 * h);
  const RealField phi_x = spectral::gradient(phi, 0);
  const RealField phi_xx = spectral::laplacian(phi);
  double residual = 0.0;
  for (std::size_t i = 0; i < 128; ++i) {
    const double phi_t = (-p2[i] + 8 * pp[i] - 8 * pm[i] + m2[i]) / (12 * h);
    residual = std::max(residual, std::abs(phi_t + 0.5 * phi_x[i] * phi_x[i] - phi_xx[i]));
  }
  EXPECT_LT(residual, 1e-8);
}

TEST(EikonalTest, ColeHopfOracleIsIdentityAtTimeZero) {
  const auto g = make_grid_1d(0.0, 1.0, 32);
  const RealField phi0 = cosine_phase(g, 3.0);
  const RealField phi = cole_hopf_oracle(phi0, 0.0);
  for (std::size_t i = 0; i < 32; ++i) EXPECT_NEAR(phi[i], phi0[i], 1e-13);
}

TEST(EikonalTest, ColeHopfOracleRejectsUnrepresentableData) {
  const auto g = make_grid_1d(0.0, 1.0, 32);
  EXPECT_THROW(cole_hopf_oracle(cosine_phase(g, 2000.0), 0.01), std::domain_error);
  EXPECT_THROW(cole_hopf_oracle(cosine_phase(g), -1.0), std::invalid_argument);
}

TEST(EikonalTest, RunTracksColeHopfSolution) {
  const auto g = make_grid_1d(0.0, 1.0, 128);
  const RealField phi0 = cosine_phase(g);
  EikonalOptions opts;
  opts.fixed_dt = 0.8 / 128 / (2 * kPi);
  const EikonalTrajectory traj = eikonal_run(phi0, PotentialSpec::zero(), 1.0, 0.1, opts);
  EXPECT_EQ(traj.final().t, 0.1);
  EXPECT_EQ(traj.frames.front().phi, phi0);
  const RealField exact = cole_hopf_oracle(phi0, 0.1);
  double err = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < 128; ++i) {
    err = std::max(err, std::abs(traj.final().phi[i] - exact[i]));
    scale = std::max(scale, std::abs(exact[i]));
  }
  EXPECT_LT(err / scale, 5e-3);
}

TEST(EikonalTest, RunRejectsInvalidParameters) {
  const auto g = make_grid_1d(0.0, 1.0, 16);
  EXPECT_THROW(eikonal_run(cosine_phase(g), PotentialSpec::zero(), 0.0, 0.1), std::invalid_argument);
  EXPECT_THROW(eikonal_run(cosine_phase(g), PotentialSpec::zero(), 1.0, 0.0), std::invalid_argument);
}

TEST(EikonalTest, AmplitudeWithoutFlowIsFreeSchrodinger) {
  const auto g = make_grid_1d(0.0, 1.0, 64);
  const double eps = 0.05;
  EikonalOptions opts;
  opts.fixed_dt = 0.01;
  const EikonalTrajectory traj = eikonal_run(RealField(g, 0.7), PotentialSpec::zero(), 1.0, 0.1, opts);
  ASSERT_EQ(traj.frames.size(), 11u);
  const ComplexField a0 = sample_complex(g, [](auto x) {
    return Complex(std::exp(-30 * (x[0] - 0.5) * (x[0] - 0.5)), 0.1 * std::sin(2 * kPi * x[0]));
  });
  const AmplitudeTrajectory amp = linear_amplitude_run(a0, traj, eps);
  ASSERT_EQ(amp.a.size(), 11u);
  EXPECT_EQ(amp.times.back(), 0.1);
  const ComplexField expected = spectral::schrodinger_propagate(a0, eps, 0.1);
  for (std::size_t i = 0; i < 64; ++i) EXPECT_LT(std::abs(amp.a.back()[i] - expected[i]), 1e-12);
}

TEST(EikonalTest, AmplitudeRunNeedsTrajectory) {
  const auto g = make_grid_1d(0.0, 1.0, 16);
  EXPECT_THROW(linear_amplitude_run(ComplexField(g), EikonalTrajectory{}, 0.1), std::invalid_argument);
}

}  // namespace
}  // namespace apnls::eikonal
