#pragma once

#include <cstddef>
#include <vector>

#include "nowcast/gpr/basis.hpp"
#include "nowcast/gpr/kernel.hpp"
#include "nowcast/gpr/model.hpp"

namespace nowcast::gpr {

/// Logarithmic grid over theta. `steps` points from theta_lo to theta_hi
/// inclusive; a single step means the grid is {theta_lo}.
struct SearchConfig {
  double theta_lo = 1e-2;
  double theta_hi = 1e2;
  std::size_t steps = 25;
  /// Search each dimension independently (Cartesian grid) instead of one shared theta.
  bool per_dimension = false;
  double jitter = kDefaultJitter;
  std::size_t threads = 1;

  /// Throws ConfigError on an empty grid or non-positive / inverted bounds.
  void validate() const;
  std::vector<double> grid() const;
  /// Ratio between adjacent grid values (1 for a single-point grid).
  double step_ratio() const;
};

/// Profile log marginal likelihood at fixed theta, with sigma_sq replaced by its
/// closed-form maximizer (residual quadratic form over N).
struct ProfileLikelihood {
  double log_likelihood = 0.0;
  double sigma_sq = 0.0;
  double jitter = 0.0;
};

ProfileLikelihood profile_log_likelihood(const TrainingSet& training, const BasisExpansion& basis,
                                         const std::vector<double>& theta, double jitter);

/// Lower bound applied to the profile sigma_sq estimate so degenerate (constant)
/// targets still yield a valid kernel.
double sigma_sq_floor(const TrainingSet& training);

/// Grid-search maximum likelihood. Ties go to the lexicographically smallest
/// theta. Cells whose covariance cannot be factorized are skipped; throws
/// FitError if every cell fails.
Kernel fit_hyperparameters(const TrainingSet& training, const BasisExpansion& basis,
                           const SearchConfig& search);

}  // namespace nowcast::gpr
