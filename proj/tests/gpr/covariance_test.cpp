#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "nowcast/error.hpp"
#include "nowcast/gpr/covariance.hpp"
#include "support/oracle.hpp"

namespace nowcast::gpr {
namespace {

TEST(BuildCovariance, SinglePointIsSigmaSq) {
  InputMatrix x(1, 1);
  x << 3.0;
  const Eigen::MatrixXd c = build_covariance(x, Kernel{2.0, {1.0}});
  ASSERT_EQ(c.rows(), 1);
  EXPECT_EQ(c(0, 0), 2.0);
}

TEST(BuildCovariance, IdenticalPointsGiveAllOnes) {
  InputMatrix x(2, 1);
  x << 0.5, 0.5;
  const Eigen::MatrixXd c = build_covariance(x, Kernel{1.0, {1.0}});
  EXPECT_TRUE(c.isApprox(Eigen::MatrixXd::Ones(2, 2), 0.0));
}

TEST(BuildCovariance, TwoPointsHandEvaluated) {
  InputMatrix x(2, 1);
  x << 0.0, 1.0;
  const Eigen::MatrixXd c = build_covariance(x, Kernel{1.0, {1.0}});
  EXPECT_EQ(c(0, 0), 1.0);
  EXPECT_EQ(c(1, 1), 1.0);
  EXPECT_NEAR(c(0, 1), 0.367879441171442321595524, 1e-15);
  EXPECT_EQ(c(0, 1), c(1, 0));
}

TEST(BuildCovariance, RegularizedAddsScaledJitter) {
  InputMatrix x(2, 1);
  x << 0.0, 1.0;
  const Kernel k{4.0, {1.0}};
  const Eigen::MatrixXd plain = build_covariance(x, k);
  const Eigen::MatrixXd reg = regularized_covariance(x, k, 1e-3);
  EXPECT_NEAR(reg(0, 0) - plain(0, 0), 4e-3, 1e-15);
  EXPECT_EQ(reg(0, 1), plain(0, 1));
}

TEST(BuildCovariance, KernelDimensionMismatch) {
  InputMatrix x(2, 2);
  x.setZero();
  EXPECT_THROW(build_covariance(x, Kernel{1.0, {1.0}}), ShapeError);
}

TEST(ExtendCovariance, NewPointEqualToTrainingPoint) {
  InputMatrix x(3, 2);
  x << 0, 0, 1, 2, -1, 0.5;
  const Kernel k{1.7, {1.0, 2.0}};
  const std::vector<double> x_new{1.0, 2.0};
  const CovarianceBorder border = extend_covariance(x, x_new, k);
  EXPECT_EQ(border.k[1], 1.7);
  EXPECT_EQ(border.kappa, 1.7);
}

TEST(ExtendCovariance, FarPointDecorrelates) {
  InputMatrix x(3, 2);
  x << 0, 0, 1, 2, -1, 0.5;
  const Kernel k{1.0, {0.5, 2.0}};
  // Squared distance per dimension at least 50 * theta_i from every point.
  const std::vector<double> x_new{1.0 + std::sqrt(50 * 0.5) + 2.0, 2.0 + std::sqrt(50 * 2.0) + 1.0};
  const CovarianceBorder border = extend_covariance(x, x_new, k);
  for (Eigen::Index j = 0; j < border.k.size(); ++j) EXPECT_LT(border.k[j], 1e-20 * k.sigma_sq);
}

TEST(ExtendCovariance, ShapeErrors) {
  InputMatrix x(2, 2);
  x.setZero();
  const std::vector<double> bad{1.0};
  EXPECT_THROW(extend_covariance(x, bad, Kernel{1.0, {1.0, 1.0}}), ShapeError);
}

TEST(ExtendCovariance, StackedBorderMatchesFullBuild) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> theta(0.1, 10.0);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = size(rng);
    const Eigen::Index d = dim(rng);
    InputMatrix stacked = testing::random_inputs(rng, n + 1, d, -2.0, 2.0);
    Kernel k{1.3, std::vector<double>(static_cast<std::size_t>(d))};
    for (auto& t : k.theta) t = theta(rng);

    const InputMatrix x = stacked.topRows(n);
    const Eigen::MatrixXd c_n = build_covariance(x, k);
    const CovarianceBorder border = extend_covariance(x, row_span(stacked, n), k);
    Eigen::MatrixXd assembled(n + 1, n + 1);
    assembled.topLeftCorner(n, n) = c_n;
    assembled.topRightCorner(n, 1) = border.k;
    assembled.bottomLeftCorner(1, n) = border.k.transpose();
    assembled(n, n) = border.kappa;

    const Eigen::MatrixXd full = build_covariance(stacked, k);
    ASSERT_EQ(full.rows(), n + 1);
    for (Eigen::Index a = 0; a <= n; ++a)
      for (Eigen::Index b = 0; b <= n; ++b) EXPECT_EQ(assembled(a, b), full(a, b));
  }
}

TEST(BuildCovariance, RegularizedIsPositiveSemidefinite) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> theta(0.1, 10.0);
  std::uniform_int_distribution<int> size(1, 20);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index d = dim(rng);
    const InputMatrix x = testing::random_inputs(rng, size(rng), d, -3.0, 3.0);
    Kernel k{1.0, std::vector<double>(static_cast<std::size_t>(d))};
    for (auto& t : k.theta) t = theta(rng);
    const Eigen::MatrixXd c = regularized_covariance(x, k, kDefaultJitter);
    EXPECT_TRUE(c.isApprox(c.transpose(), 0.0));
    EXPECT_EQ(c.diagonal().minCoeff(), c.diagonal().maxCoeff());
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(c, Eigen::EigenvaluesOnly);
    EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-10);
  }
}

}  // namespace
}  // namespace nowcast::gpr
