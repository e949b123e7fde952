#pragma once

#include <span>

#include <Eigen/Core>

#include "nowcast/gpr/kernel.hpp"

namespace nowcast::gpr {

/// Inputs are stored one observation per row; row-major keeps each row contiguous.
using InputMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline std::span<const double> row_span(const InputMatrix& inputs, Eigen::Index row) {
  return {inputs.data() + row * inputs.cols(), static_cast<std::size_t>(inputs.cols())};
}

/// Dense N x N covariance sigma_sq * rho(x_j, x_k).
Eigen::MatrixXd build_covariance(const InputMatrix& inputs, const Kernel& kernel);

/// build_covariance plus jitter * sigma_sq on the diagonal.
Eigen::MatrixXd regularized_covariance(const InputMatrix& inputs, const Kernel& kernel,
                                       double jitter);

/// Border of the covariance matrix grown by one point: the cross-covariance
/// vector `k` against every training row and the prior variance `kappa` of the
/// new point.
struct CovarianceBorder {
  Eigen::VectorXd k;
  double kappa = 0.0;
};

CovarianceBorder extend_covariance(const InputMatrix& inputs, std::span<const double> x_new,
                                   const Kernel& kernel);

}  // namespace nowcast::gpr
