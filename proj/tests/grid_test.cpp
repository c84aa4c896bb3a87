#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "apnls/field.hpp"
#include "apnls/grid.hpp"

namespace apnls {
namespace {

TEST(GridTest, OneDimensionalGeometry) {
  const auto g = make_grid_1d(-0.5, 1.5, 8);
  EXPECT_EQ(g->dim(), 1);
  EXPECT_EQ(g->size(), 8u);
  EXPECT_DOUBLE_EQ(g->spacing(0), 0.25);
  EXPECT_DOUBLE_EQ(g->length(0), 2.0);
  EXPECT_DOUBLE_EQ(g->node(0, 0), -0.5);
  EXPECT_DOUBLE_EQ(g->node(0, 7), 1.25);
  EXPECT_DOUBLE_EQ(g->cell_volume(), 0.25);
}

TEST(GridTest, WavenumbersFollowTransformOrder) {
  const auto g = make_grid_1d(0.0, 2.0, 8);
  const std::vector<int> modes = {0, 1, 2, 3, -4, -3, -2, -1};
  const auto& k = g->wavenumbers(0);
  ASSERT_EQ(k.size(), modes.size());
  for (std::size_t j = 0; j < modes.size(); ++j) {
    EXPECT_DOUBLE_EQ(k[j], 2.0 * std::numbers::pi * modes[j] / 2.0);
  }
  EXPECT_EQ(g->nyquist_index(0), 4u);
}

TEST(GridTest, TwoDimensionalLayoutIsRowMajor) {
  const auto g = make_grid_2d({0.0, 1.0}, {0.0, 2.0}, 4, 8);
  EXPECT_EQ(g->size(), 32u);
  EXPECT_EQ(g->stride(0), 8u);
  EXPECT_EQ(g->stride(1), 1u);
  double x[2];
  g->coordinates(8 * 2 + 3, x);
  EXPECT_DOUBLE_EQ(x[0], 0.5);
  EXPECT_DOUBLE_EQ(x[1], 0.75);
  EXPECT_DOUBLE_EQ(g->min_spacing(), 0.25);
  EXPECT_DOUBLE_EQ(g->cell_volume(), 0.25 * 0.25);
}

TEST(GridTest, RejectsInvalidPointCounts) {
  EXPECT_THROW(make_grid_1d(0.0, 1.0, 12), std::invalid_argument);
  EXPECT_THROW(make_grid_1d(0.0, 1.0, 2), std::invalid_argument);
  EXPECT_THROW(make_grid_1d(1.0, 1.0, 16), std::invalid_argument);
  EXPECT_THROW(make_grid_2d({0.0, 1.0}, {0.0, 1.0}, 16, 24), std::invalid_argument);
}

TEST(GridTest, NestingRequiresSameBoxAndDivisibleCounts) {
  const auto fine = make_grid_1d(-0.5, 1.5, 64);
  EXPECT_TRUE(make_grid_1d(-0.5, 1.5, 16)->nests_in(*fine));
  EXPECT_TRUE(fine->nests_in(*fine));
  EXPECT_FALSE(make_grid_1d(-0.5, 1.5, 128)->nests_in(*fine));
  EXPECT_FALSE(make_grid_1d(0.0, 2.0, 16)->nests_in(*fine));
}

TEST(GridTest, PowerOfTwoPredicate) {
  EXPECT_TRUE(is_power_of_two(1));
  EXPECT_TRUE(is_power_of_two(4096));
  EXPECT_FALSE(is_power_of_two(0));
  EXPECT_FALSE(is_power_of_two(96));
}

TEST(FieldTest, SamplingUsesNodeCoordinates) {
  const auto g = make_grid_2d({0.0, 1.0}, {0.0, 1.0}, 4, 4);
  const RealField f = sample_real(g, [](auto x) { return x[0] + 10.0 * x[1]; });
  EXPECT_DOUBLE_EQ(f[1 * 4 + 2], 0.25 + 10.0 * 0.5);
}

TEST(FieldTest, RealAndImaginaryParts) {
  const auto g = make_grid_1d(0.0, 1.0, 4);
  ComplexField u(g);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = Complex(i, -2.0 * i);
  EXPECT_DOUBLE_EQ(real_part(u)[3], 3.0);
  EXPECT_DOUBLE_EQ(imag_part(u)[3], -6.0);
  EXPECT_EQ(to_complex(real_part(u))[2], Complex(2.0, 0.0));
}

TEST(FieldTest, FinitenessAndGridChecks) {
  const auto g = make_grid_1d(0.0, 1.0, 4);
  RealField f(g, 1.0);
  EXPECT_TRUE(f.all_finite());
  f[2] = std::nan("");
  EXPECT_FALSE(f.all_finite());
  EXPECT_THROW(require_same_grid(*g, *make_grid_1d(0.0, 1.0, 8), "test"), std::invalid_argument);
}

TEST(FieldTest, VectorFieldHasOneComponentPerAxis) {
  const auto g = make_grid_2d({0.0, 1.0}, {0.0, 1.0}, 4, 8);
  RealVectorField v(g);
  EXPECT_EQ(v.dim(), 2);
  EXPECT_EQ(v.size(), 32u);
  v[1][5] = std::numeric_limits<double>::infinity();
  EXPECT_FALSE(v.all_finite());
}

}  // namespace
}  // namespace apnls
