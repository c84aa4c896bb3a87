#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "apnls/quasilinear.hpp"

namespace apnls::hydro {
namespace {

// det(M - lambda I) by cofactor expansion.
double char_poly(const QuasilinearMatrix& m, double lambda) {
  const int n = m.size;
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r][c] = m(r, c) - (r == c ? lambda : 0.0);
  auto det = [](auto&& self, const std::vector<std::vector<double>>& b) -> double {
    const std::size_t k = b.size();
    if (k == 1) return b[0][0];
    double s = 0.0;
    for (std::size_t col = 0; col < k; ++col) {
      std::vector<std::vector<double>> minor;
      for (std::size_t r = 1; r < k; ++r) {
        std::vector<double> row;
        for (std::size_t c = 0; c < k; ++c)
          if (c != col) row.push_back(b[r][c]);
        minor.push_back(row);
      }
      s += (col % 2 == 0 ? 1.0 : -1.0) * b[0][col] * self(self, minor);
    }
    return s;
  };
  return det(det, a);
}

TEST(QuasilinearTest, EntriesIn1D) {
  const StateVector u{0.6, -0.8, 1.5, 0.0};
  const auto m = assemble_matrix(u, 3, 0, 0.1, Nonlinearity::cubic());
  EXPECT_EQ(m.size, 3);
  EXPECT_DOUBLE_EQ(m(0, 0), 1.5);
  EXPECT_DOUBLE_EQ(m(1, 1), 1.5);
  EXPECT_DOUBLE_EQ(m(2, 2), 1.5);
  EXPECT_DOUBLE_EQ(m(0, 2), 0.3 + 0.08);
  EXPECT_DOUBLE_EQ(m(1, 2), -0.4 + 0.06);
  EXPECT_DOUBLE_EQ(m(2, 0), 1.2);
  EXPECT_DOUBLE_EQ(m(2, 1), -1.6);
  EXPECT_DOUBLE_EQ(m(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(m(1, 0), 0.0);
}

TEST(QuasilinearTest, TwoDimensionalDirectionSelectsVelocityComponent) {
  const StateVector u{0.5, 0.2, -1.0, 2.0};
  const auto nl = Nonlinearity::cubic_quintic(0.5);
  const auto my = assemble_matrix(u, 4, 1, 0.0, nl);
  EXPECT_DOUBLE_EQ(my(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(my(2, 2), 2.0);
  EXPECT_DOUBLE_EQ(my(0, 3), 0.25);
  EXPECT_DOUBLE_EQ(my(0, 2), 0.0);
  const double dfv = nl.df(0.29);
  EXPECT_DOUBLE_EQ(my(3, 0), 2 * dfv * 0.5);
  EXPECT_DOUBLE_EQ(my(2, 0), 0.0);
  const std::vector<double> flat{0.5, 0.2, -1.0, 2.0};
  const auto mspan = assemble_matrix(std::span<const double>(flat), 1, 0.0, nl);
  EXPECT_EQ(mspan.m, my.m);
}

TEST(QuasilinearTest, EigenvaluesAreVelocityPlusMinusSoundSpeed) {
  const auto nl = Nonlinearity::saturated(0.3, 2.0, 1.0);
  for (double eps : {0.0, 0.05, 0.5}) {
    const StateVector u{0.7, 0.4, -0.3, 0.0};
    const auto m = assemble_matrix(u, 3, 0, eps, nl);
    const double rho = 0.49 + 0.16;
    const double c = std::sqrt(rho * nl.df(rho));
    for (double lambda : {-0.3, -0.3 + c, -0.3 - c}) {
      EXPECT_NEAR(char_poly(m, lambda), 0.0, 1e-12) << "eps=" << eps << " lambda=" << lambda;
    }
  }
}

TEST(QuasilinearTest, LinearVariantHasNoPressureRow) {
  const StateVector u{0.7, 0.4, -0.3, 0.0};
  const auto m = assemble_matrix(u, 3, 0, 0.1, Nonlinearity::linear_potential(PotentialSpec::zero()));
  EXPECT_EQ(m(2, 0), 0.0);
  EXPECT_EQ(m(2, 1), 0.0);
}

TEST(QuasilinearTest, ApplyIsMatrixVectorProduct) {
  const StateVector u{0.6, -0.8, 1.5, 0.0};
  const auto m = assemble_matrix(u, 3, 0, 0.1, Nonlinearity::cubic());
  const StateVector x{1.0, 2.0, 3.0, 99.0};
  const StateVector y = m.apply(x);
  for (int r = 0; r < 3; ++r) {
    EXPECT_DOUBLE_EQ(y[r], m(r, 0) * 1.0 + m(r, 1) * 2.0 + m(r, 2) * 3.0);
  }
  EXPECT_EQ(y[3], 0.0);
}

}  // namespace
}  // namespace apnls::hydro
