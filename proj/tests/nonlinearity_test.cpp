#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "apnls/nonlinearity.hpp"
#include "apnls/potential.hpp"
#include "apnls/spectral.hpp"
#include "support/oracles.hpp"

namespace apnls {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_consistent(const Nonlinearity& nl) {
  for (double y : {0.05, 0.3, 1.0, 2.5}) {
    const double df = oracle::d1_central4([&](double s) { return nl.f(s); }, y, 1e-3);
    const double dF = oracle::d1_central4([&](double s) { return nl.antiderivative(s); }, y, 1e-3);
    EXPECT_NEAR(nl.df(y), df, 1e-9) << nl.tag() << " y=" << y;
    EXPECT_NEAR(nl.f(y), dF, 1e-9) << nl.tag() << " y=" << y;
    EXPECT_GE(nl.df(y), nl.coercivity() - 1e-15);
  }
  EXPECT_DOUBLE_EQ(nl.f(0.0), 0.0);
  EXPECT_DOUBLE_EQ(nl.antiderivative(0.0), 0.0);
}

TEST(NonlinearityTest, CubicValues) {
  const auto nl = Nonlinearity::cubic();
  EXPECT_DOUBLE_EQ(nl.f(0.7), 0.7);
  EXPECT_DOUBLE_EQ(nl.df(0.7), 1.0);
  EXPECT_DOUBLE_EQ(nl.antiderivative(0.6), 0.18);
  EXPECT_DOUBLE_EQ(nl.coercivity(), 1.0);
  EXPECT_TRUE(nl.couples_density());
  expect_consistent(nl);
}

TEST(NonlinearityTest, CubicQuinticValues) {
  const auto nl = Nonlinearity::cubic_quintic(0.5);
  EXPECT_DOUBLE_EQ(nl.f(2.0), 2.0 + 0.5 * 4.0);
  EXPECT_DOUBLE_EQ(nl.coercivity(), 1.0);
  expect_consistent(nl);
}

TEST(NonlinearityTest, SaturatedValues) {
  const auto nl = Nonlinearity::saturated(0.2, 1.5, 3.0);
  EXPECT_NEAR(nl.f(1.0), 0.2 + 1.5 / 4.0, 1e-15);
  EXPECT_NEAR(nl.coercivity(), 0.2, 1e-15);
  expect_consistent(nl);
}

TEST(NonlinearityTest, LinearVariantHasNoPressure) {
  const auto nl = Nonlinearity::linear_potential(PotentialSpec::cosine(0.3));
  EXPECT_FALSE(nl.couples_density());
  EXPECT_EQ(nl.f(1.3), 0.0);
  EXPECT_EQ(nl.df(1.3), 0.0);
  EXPECT_EQ(nl.coercivity(), 0.0);
  EXPECT_DOUBLE_EQ(nl.potential().amplitude(), 0.3);
  EXPECT_THROW(Nonlinearity::cubic().potential(), std::logic_error);
}

TEST(NonlinearityTest, RejectsInvalidParameters) {
  EXPECT_THROW(Nonlinearity::cubic_quintic(-0.1), std::invalid_argument);
  EXPECT_THROW(Nonlinearity::saturated(0.0, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(Nonlinearity::saturated(1.0, -1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(Nonlinearity::saturated(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST(PotentialTest, CosineSamplesAndGradient) {
  const auto g = make_grid_1d(-0.5, 1.5, 32);
  const auto p = PotentialSpec::cosine(0.4, 2);
  const RealField v = p.sample(g, 0.0);
  const RealVectorField dv = p.gradient(g, 0.0);
  for (std::size_t j = 0; j < 32; ++j) {
    const double s = 2 * kPi * 2 * (g->node(0, j) + 0.5) / 2.0;
    EXPECT_NEAR(v[j], 0.4 * std::cos(s), 1e-15);
    EXPECT_NEAR(dv[0][j], -0.4 * 2 * kPi * std::sin(s), 1e-12);
  }
  EXPECT_FALSE(p.is_zero());
  EXPECT_FALSE(p.time_dependent());
}

TEST(PotentialTest, ZeroAndTable) {
  const auto fine = make_grid_1d(0.0, 1.0, 16);
  const auto coarse = make_grid_1d(0.0, 1.0, 8);
  EXPECT_TRUE(PotentialSpec::zero().is_zero());
  const RealField samples = sample_real(fine, [](auto x) { return x[0] * x[0]; });
  const auto p = PotentialSpec::table(samples);
  EXPECT_EQ(p.sample(fine, 0.0), samples);
  const RealField c = p.sample(coarse, 0.0);
  for (std::size_t j = 0; j < 8; ++j) EXPECT_DOUBLE_EQ(c[j], samples[2 * j]);
  EXPECT_THROW(p.sample(make_grid_1d(0.0, 1.0, 32), 0.0), std::invalid_argument);
}

TEST(PotentialTest, CustomEvaluatorIsTimeDependent) {
  const auto g = make_grid_1d(0.0, 1.0, 8);
  const auto p = PotentialSpec::custom(
      "wave", [](double t, std::span<const double> x) { return t * std::sin(2 * kPi * x[0]); }, true);
  EXPECT_TRUE(p.time_dependent());
  EXPECT_NEAR(p.sample(g, 2.0)[2], 2.0, 1e-15);
}

}  // namespace
}  // namespace apnls
