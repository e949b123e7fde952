#pragma once

#include <span>
#include <vector>

namespace nowcast::gpr {

inline constexpr double kDefaultJitter = 1e-10;

/// Squared-exponential correlation model with per-dimension correlation lengths.
///
/// Correlation between two inputs is exp(-sum_i (a_i - b_i)^2 / theta_i), and the
/// covariance is sigma_sq times that. `jitter` is a nugget expressed as a fraction
/// of sigma_sq and is only ever added to the diagonal of a training covariance.
struct Kernel {
  double sigma_sq = 1.0;
  std::vector<double> theta;
  double jitter = kDefaultJitter;

  std::size_t dimension() const noexcept { return theta.size(); }

  /// Throws DomainError if sigma_sq <= 0, any theta_i <= 0, jitter < 0, or theta is empty.
  void validate() const;

  /// A kernel with the same correlation length in every dimension.
  static Kernel isotropic(double sigma_sq, double theta, std::size_t dimension,
                          double jitter = kDefaultJitter);
};

/// Correlation in (0, 1]; exactly 1 for identical inputs. Throws ShapeError on
/// dimension mismatch.
double kernel_correlation(std::span<const double> a, std::span<const double> b,
                          const Kernel& kernel);

}  // namespace nowcast::gpr
