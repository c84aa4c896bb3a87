#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "apnls/harness/plotdata.hpp"

namespace apnls::harness {
namespace {

TEST(PlotdataTest, SlopeOfExactPowerLaw) {
  const std::vector<double> x{0.1, 0.05, 0.025, 0.0125};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * v * v);
  const auto s = loglog_slope(x, y);
  ASSERT_TRUE(s.has_value());
  EXPECT_NEAR(*s, 2.0, 1e-12);
}

TEST(PlotdataTest, SlopeNeedsTwoPositivePoints) {
  const std::vector<double> one{1.0};
  EXPECT_FALSE(loglog_slope(one, one).has_value());
  const std::vector<double> x{1.0, 2.0}, y{1.0, 0.0};
  EXPECT_FALSE(loglog_slope(x, y).has_value());
}

TEST(PlotdataTest, ModeNamesRoundTrip) {
  EXPECT_EQ(parse_plot_mode("vs-J"), PlotMode::vs_j);
  EXPECT_EQ(parse_plot_mode("vs-eps"), PlotMode::vs_eps);
  EXPECT_EQ(parse_plot_mode(to_string(PlotMode::vs_j)), PlotMode::vs_j);
  EXPECT_THROW(parse_plot_mode("vs-t"), std::exception);
}

std::vector<ErrorRecord> table() {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  return {
      {0.1, 32, 0.05, 4e-2, 8e-2, 0.0, "ok"},
      {0.1, 64, 0.05, 1e-2, 2e-2, 0.0, "ok"},
      {0.1, 128, 0.05, nan, nan, 0.0, "blowup: step 7"},
      {0.01, 32, 0.05, 5e-3, 6e-3, 0.0, "ok"},
      {0.01, 64, 0.05, 5e-3, 6e-3, 0.0, "ok"},
  };
}

TEST(PlotdataTest, SeriesVersusMeshSize) {
  const auto series = make_series(table(), PlotMode::vs_j, 2.0);
  // (rho, j) for each eps at one time.
  ASSERT_EQ(series.size(), 4u);
  const auto& first = series.front();
  EXPECT_EQ(first.key, 0.1);
  ASSERT_EQ(first.x.size(), 2u);
  EXPECT_DOUBLE_EQ(first.x[0], 2.0 / 32);
  ASSERT_TRUE(first.slope.has_value());
  EXPECT_NEAR(*first.slope, 2.0, 1e-12);
}

TEST(PlotdataTest, SeriesVersusEpsilon) {
  const auto series = make_series(table(), PlotMode::vs_eps, 2.0);
  for (const auto& s : series) {
    EXPECT_TRUE(s.key == 32.0 || s.key == 64.0);
    EXPECT_EQ(s.x.size(), 2u);
  }
}

TEST(PlotdataTest, WritesSeriesAndSlopeSummary) {
  const auto dir = std::filesystem::temp_directory_path() / "apnls_plotdata_test";
  std::filesystem::remove_all(dir);
  const auto files = write_plotdata(make_series(table(), PlotMode::vs_j, 2.0), PlotMode::vs_j, dir);
  EXPECT_EQ(files.size(), 5u);
  EXPECT_TRUE(std::filesystem::exists(dir / "slopes.csv"));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace apnls::harness
