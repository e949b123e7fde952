#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <span>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "nowcast/gpr/basis.hpp"
#include "nowcast/gpr/covariance.hpp"
#include "nowcast/gpr/kernel.hpp"

namespace nowcast::gpr {

inline constexpr double kMaxJitter = 1e-4;

struct TrainingSet {
  InputMatrix inputs;       // N x d
  Eigen::VectorXd targets;  // N

  std::size_t size() const noexcept { return static_cast<std::size_t>(targets.size()); }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(inputs.cols()); }

  /// Throws ShapeError for empty or mismatched data, DomainError for NaN/inf entries.
  void validate() const;
};

struct Prediction {
  double mean = 0.0;
  double variance = 0.0;
};

/// Additive pieces of the posterior at one point, before clamping.
struct PredictionTerms {
  double trend = 0.0;           // F(x) . beta
  double correction = 0.0;      // k^T alpha
  double prior_variance = 0.0;  // kappa
  double explained = 0.0;       // k^T C^-1 k
  double basis_variance = 0.0;  // u^T (F^T C^-1 F)^-1 u

  double mean() const noexcept { return trend + correction; }
  double variance() const noexcept { return prior_variance - explained + basis_variance; }
};

/// Fitted universal-kriging model: generalized least-squares trend plus a
/// zero-mean Gaussian process on the residuals. Immutable after fit(); const
/// member functions are safe to call concurrently.
class GprModel {
 public:
  const TrainingSet& training() const noexcept { return training_; }
  /// Kernel as used, with `jitter` raised to whatever value made C_N factorizable.
  const Kernel& kernel() const noexcept { return kernel_; }
  const BasisExpansion& basis() const noexcept { return basis_; }
  const Eigen::VectorXd& beta() const noexcept { return beta_; }
  const Eigen::VectorXd& alpha() const noexcept { return alpha_; }
  /// Lower Cholesky factor of C_N + jitter * sigma_sq * I.
  Eigen::MatrixXd chol() const;

  Prediction predict(std::span<const double> x_new) const;
  PredictionTerms predict_terms(std::span<const double> x_new) const;

  /// Number of predictions whose variance rounded below zero and was clamped.
  std::size_t clamped_variance_count() const noexcept { return diagnostics_->clamped.load(); }

 private:
  friend GprModel fit(TrainingSet training, BasisExpansion basis, Kernel kernel);

  struct Diagnostics {
    std::atomic<std::size_t> clamped{0};
  };

  GprModel(TrainingSet training, Kernel kernel, BasisExpansion basis);

  TrainingSet training_;
  Kernel kernel_;
  BasisExpansion basis_;
  Eigen::LLT<Eigen::MatrixXd> covariance_factor_;
  Eigen::MatrixXd whitened_basis_;                // L^-1 F
  Eigen::LLT<Eigen::MatrixXd> gls_factor_;        // F^T C^-1 F
  Eigen::VectorXd beta_;
  Eigen::VectorXd alpha_;
  std::shared_ptr<Diagnostics> diagnostics_ = std::make_shared<Diagnostics>();
};

/// Fits beta by generalized least squares against the regularized covariance.
///
/// The diagonal nugget starts at kernel.jitter and is raised by x10 (from 1e-10
/// when it starts at zero) until Cholesky succeeds or kMaxJitter is exceeded.
/// Throws FitError when no nugget works or F^T C^-1 F is singular.
GprModel fit(TrainingSet training, BasisExpansion basis, Kernel kernel);

/// Nugget schedule used by fit(): starting value, then x10 steps up to kMaxJitter.
std::vector<double> jitter_schedule(double initial);

}  // namespace nowcast::gpr
