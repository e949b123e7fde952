#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "nowcast/gpr/covariance.hpp"
#include "nowcast/gpr/kernel.hpp"

namespace nowcast::gpr::detail {

// Generalized least-squares solve shared by fit() and the likelihood search.
struct GlsSolution {
  Eigen::LLT<Eigen::MatrixXd> covariance_factor;  // C_N + jitter * sigma_sq * I
  double jitter = 0.0;
  Eigen::MatrixXd whitened_basis;                 // L^-1 F
  Eigen::LLT<Eigen::MatrixXd> gls_factor;         // F^T C^-1 F
  Eigen::VectorXd beta;
  Eigen::VectorXd whitened_residual;              // L^-1 (t - F beta)
};

// Throws FitError when the covariance stays indefinite through the whole jitter
// schedule or when F^T C^-1 F is numerically singular.
GlsSolution solve_gls(const InputMatrix& inputs, const Eigen::VectorXd& targets,
                      const Eigen::MatrixXd& design, const Kernel& kernel);

}  // namespace nowcast::gpr::detail
