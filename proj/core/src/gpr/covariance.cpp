#include "nowcast/gpr/covariance.hpp"

#include <string>

#include "nowcast/error.hpp"

namespace nowcast::gpr {

namespace {

void check_dimension(const InputMatrix& inputs, const Kernel& kernel) {
  if (static_cast<std::size_t>(inputs.cols()) != kernel.dimension()) {
    throw ShapeError("covariance: inputs have " + std::to_string(inputs.cols()) +
                     " columns but kernel has " + std::to_string(kernel.dimension()) +
                     " correlation lengths");
  }
}

}  // namespace

Eigen::MatrixXd build_covariance(const InputMatrix& inputs, const Kernel& kernel) {
  check_dimension(inputs, kernel);
  const Eigen::Index n = inputs.rows();
  Eigen::MatrixXd cov(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    cov(j, j) = kernel.sigma_sq;
    for (Eigen::Index k = 0; k < j; ++k) {
      const double c = kernel.sigma_sq * kernel_correlation(row_span(inputs, j), row_span(inputs, k), kernel);
      cov(j, k) = c;
      cov(k, j) = c;
    }
  }
  return cov;
}

Eigen::MatrixXd regularized_covariance(const InputMatrix& inputs, const Kernel& kernel,
                                       double jitter) {
  Eigen::MatrixXd cov = build_covariance(inputs, kernel);
  cov.diagonal().array() += jitter * kernel.sigma_sq;
  return cov;
}

CovarianceBorder extend_covariance(const InputMatrix& inputs, std::span<const double> x_new,
                                   const Kernel& kernel) {
  check_dimension(inputs, kernel);
  if (x_new.size() != kernel.dimension()) {
    throw ShapeError("extend_covariance: new point has dimension " + std::to_string(x_new.size()) +
                     ", expected " + std::to_string(kernel.dimension()));
  }
  CovarianceBorder border;
  border.k.resize(inputs.rows());
  for (Eigen::Index j = 0; j < inputs.rows(); ++j) {
    border.k[j] = kernel.sigma_sq * kernel_correlation(row_span(inputs, j), x_new, kernel);
  }
  border.kappa = kernel.sigma_sq;
  return border;
}

}  // namespace nowcast::gpr
