#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "nowcast/error.hpp"
#include "nowcast/gpr/hyperparameters.hpp"
#include "support/oracle.hpp"

namespace nowcast::gpr {
namespace {

const BasisExpansion kConst1(BasisDegree::Constant, 1);

SearchConfig recovery_grid() {
  SearchConfig s;
  s.theta_lo = 1e-2;
  s.theta_hi = 1e2;
  s.steps = 25;
  return s;
}

TEST(SearchConfig, GridIsLogarithmicAndInclusive) {
  SearchConfig s;
  s.theta_lo = 0.01;
  s.theta_hi = 100.0;
  s.steps = 5;
  const auto g = s.grid();
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g.front(), 0.01);
  EXPECT_EQ(g.back(), 100.0);
  EXPECT_NEAR(g[2], 1.0, 1e-12);
  EXPECT_NEAR(s.step_ratio(), 10.0, 1e-12);
}

TEST(SearchConfig, RejectsEmptyOrInvertedGrid) {
  SearchConfig s;
  s.steps = 0;
  EXPECT_THROW(s.validate(), ConfigError);
  s.steps = 3;
  s.theta_lo = 2.0;
  s.theta_hi = 1.0;
  EXPECT_THROW(s.validate(), ConfigError);
  s.theta_lo = 0.0;
  EXPECT_THROW(s.validate(), ConfigError);
  s.theta_lo = s.theta_hi = 1.0;
  EXPECT_THROW(s.validate(), ConfigError);
  s.steps = 1;
  EXPECT_NO_THROW(s.validate());
}

TEST(ProfileLikelihood, MatchesDenseOracle) {
  const TrainingSet t = testing::recovery_training(1);
  for (double theta : {0.05, 0.3, 1.0, 4.0}) {
    for (auto degree : {BasisDegree::Constant, BasisDegree::Linear}) {
      const auto got = profile_log_likelihood(t, BasisExpansion(degree, 1), {theta}, 1e-8);
      ASSERT_EQ(got.jitter, 1e-8);
      const double want = testing::dense_profile_log_likelihood(t, degree, {theta}, 1e-8, sigma_sq_floor(t));
      EXPECT_NEAR(got.log_likelihood, want, 1e-6 * std::abs(want)) << "theta " << theta;
    }
  }
}

TEST(FitHyperparameters, SingleCellReturnsThatKernel) {
  const TrainingSet t = testing::recovery_training(2);
  SearchConfig s;
  s.theta_lo = s.theta_hi = 0.7;
  s.steps = 1;
  const Kernel k = fit_hyperparameters(t, kConst1, s);
  ASSERT_EQ(k.theta.size(), 1u);
  EXPECT_EQ(k.theta[0], 0.7);
  EXPECT_EQ(k.sigma_sq, profile_log_likelihood(t, kConst1, {0.7}, s.jitter).sigma_sq);
}

TEST(FitHyperparameters, ConstantTargetsStillReturn) {
  const auto t = testing::make_training({{0.0}, {1.0}, {2.0}, {3.0}, {4.0}}, {6.0, 6.0, 6.0, 6.0, 6.0});
  const auto grid = recovery_grid().grid();
  const Kernel k = fit_hyperparameters(t, kConst1, recovery_grid());
  EXPECT_TRUE(k.theta[0] == grid.front() || k.theta[0] == grid.back()) << k.theta[0];
  EXPECT_LE(k.sigma_sq, 1e-9);
  EXPECT_GT(k.sigma_sq, 0.0);
}

TEST(FitHyperparameters, RecoversGeneratingCorrelationLength) {
  const SearchConfig grid = recovery_grid();
  const double tolerance = std::log(grid.step_ratio()) * (1.0 + 1e-9);
  for (std::uint64_t seed : {101u, 102u, 103u}) {
    const Kernel k = fit_hyperparameters(testing::recovery_training(seed), kConst1, grid);
    EXPECT_LE(std::abs(std::log(k.theta[0])), tolerance) << "seed " << seed << " theta " << k.theta[0];
  }
}

TEST(FitHyperparameters, ArgmaxAgreesWithBruteForceLikelihood) {
  // A larger nugget keeps the dense inverse trustworthy across the whole grid.
  SearchConfig grid = recovery_grid();
  grid.jitter = 1e-6;
  const TrainingSet t = testing::recovery_training(104);
  const Kernel k = fit_hyperparameters(t, kConst1, grid);
  double best = -INFINITY;
  double best_theta = 0.0;
  for (double theta : grid.grid()) {
    const double ll = testing::dense_profile_log_likelihood(t, BasisDegree::Constant, {theta}, grid.jitter,
                                                            sigma_sq_floor(t));
    if (ll > best) {
      best = ll;
      best_theta = theta;
    }
  }
  EXPECT_EQ(k.theta[0], best_theta);
}

TEST(FitHyperparameters, FiniteDifferenceGradientPointsTowardOptimum) {
  const SearchConfig grid = recovery_grid();
  const auto values = grid.grid();
  for (std::uint64_t seed : {105u, 106u}) {
    const TrainingSet t = testing::recovery_training(seed);
    const Kernel k = fit_hyperparameters(t, kConst1, grid);
    const auto at = [&](double log_theta) {
      return profile_log_likelihood(t, kConst1, {std::exp(log_theta)}, grid.jitter).log_likelihood;
    };
    const double h = 1e-4;
    for (double theta : values) {
      // Only points adjacent to the optimum: elsewhere the surface may be multimodal.
      const double ratio = theta / k.theta[0];
      if (std::abs(std::log(ratio)) > 1.01 * std::log(grid.step_ratio()) || ratio == 1.0) continue;
      const double lt = std::log(theta);
      const double gradient = (at(lt + h) - at(lt - h)) / (2.0 * h);
      if (theta < k.theta[0]) {
        EXPECT_GT(gradient, 0.0) << "seed " << seed << " theta " << theta;
      } else {
        EXPECT_LT(gradient, 0.0) << "seed " << seed << " theta " << theta;
      }
    }
  }
}

TEST(FitHyperparameters, TiesGoToSmallestTheta) {
  // The second column is constant, so its correlation length cannot change the likelihood.
  const auto t = testing::make_training({{0.0, 5.0}, {0.8, 5.0}, {1.5, 5.0}, {2.9, 5.0}, {4.0, 5.0}},
                                        {0.3, -0.2, 0.9, 0.1, -0.5});
  SearchConfig s = recovery_grid();
  s.steps = 9;
  s.per_dimension = true;
  const Kernel k = fit_hyperparameters(t, BasisExpansion(BasisDegree::Constant, 2), s);
  ASSERT_EQ(k.theta.size(), 2u);
  EXPECT_EQ(k.theta[1], s.theta_lo);
}

TEST(FitHyperparameters, ParallelSearchIsDeterministic) {
  const TrainingSet t = testing::recovery_training(107);
  SearchConfig serial = recovery_grid();
  SearchConfig parallel = serial;
  parallel.threads = 4;
  const Kernel a = fit_hyperparameters(t, kConst1, serial);
  const Kernel b = fit_hyperparameters(t, kConst1, parallel);
  EXPECT_EQ(a.theta, b.theta);
  EXPECT_EQ(a.sigma_sq, b.sigma_sq);
  EXPECT_EQ(a.jitter, b.jitter);
}

TEST(FitHyperparameters, EmptyGridIsConfigError) {
  SearchConfig s;
  s.steps = 0;
  EXPECT_THROW(fit_hyperparameters(testing::recovery_training(1), kConst1, s), ConfigError);
}

}  // namespace
}  // namespace nowcast::gpr
