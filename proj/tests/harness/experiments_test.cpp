#include <gtest/gtest.h>

#include <filesystem>

#include "apnls/harness/experiments.hpp"

namespace apnls::harness {
namespace {

TEST(ExperimentsTest, SelftestPasses) {
  const auto checks = selftest(7);
  EXPECT_GE(checks.size(), 9u);
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(ExperimentsTest, FittedOrder) {
  const auto order = fitted_order({0.1, 0.05, 0.025}, {1e-2, 2.5e-3, 6.25e-4});
  ASSERT_TRUE(order.has_value());
  EXPECT_NEAR(*order, 2.0, 1e-12);
  EXPECT_FALSE(fitted_order({0.1}, {1.0}).has_value());
}

TEST(ExperimentsTest, EikonalVerifyConverges) {
  ExperimentConfig c = default_config_1d();
  c.equation = Equation::eikonal;
  c.lower = 0.0;
  c.upper = 1.0;
  c.initial.tag = "cosine-phase";
  c.sweep.points = {32, 64, 128};
  c.sweep.times = {0.05};
  c.reference.points = 4096;
  const auto rows = eikonal_verify(c);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_FALSE(rows[0].order.has_value());
  ASSERT_TRUE(rows[2].order.has_value());
  EXPECT_GT(*rows[2].order, 1.8);
  c.potential.tag = "single-cosine";
  c.potential.amplitude = 1.0;
  EXPECT_THROW(eikonal_verify(c), ConfigError);
}

TEST(ExperimentsTest, RunWritesSnapshots) {
  ExperimentConfig c = default_config_1d();
  c.sweep.times = {0.01};
  const auto run = run_ap(c, 0.1, 32, run_options(c));
  ASSERT_EQ(run.snapshots.size(), 1u);
  const auto dir = std::filesystem::temp_directory_path() / "apnls_experiments_test";
  std::filesystem::remove_all(dir);
  const auto files = write_run(run, dir);
  EXPECT_EQ(files.size(), 6u);
  for (const auto& f : files) EXPECT_TRUE(std::filesystem::exists(f));
  std::filesystem::remove_all(dir);
}

TEST(ExperimentsTest, ReconstructionReportsError) {
  ExperimentConfig c = default_config_1d();
  c.sweep.times = {0.02};
  c.reference.points = 512;
  const auto pts = reconstruct_run(c, 0.1, 128, true, obs::PhaseQuadrature::left_rectangle);
  ASSERT_EQ(pts.size(), 1u);
  ASSERT_TRUE(pts[0].err_re_u.has_value());
  EXPECT_LT(*pts[0].err_re_u, 0.2);
}

}  // namespace
}  // namespace apnls::harness
