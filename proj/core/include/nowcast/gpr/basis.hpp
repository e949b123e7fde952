#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "nowcast/gpr/covariance.hpp"

namespace nowcast::gpr {

enum class BasisDegree { Constant, Linear };

std::string_view to_string(BasisDegree degree);
/// Accepts "const" / "constant" and "linear"; throws ConfigError otherwise.
BasisDegree parse_basis_degree(std::string_view text);

/// Regression functions of the mean: f_0(x) = 1, optionally followed by x_1..x_d.
class BasisExpansion {
 public:
  BasisExpansion(BasisDegree degree, std::size_t input_dimension);

  BasisDegree degree() const noexcept { return degree_; }
  std::size_t input_dimension() const noexcept { return input_dimension_; }
  std::size_t size() const noexcept;

  Eigen::VectorXd evaluate(std::span<const double> x) const;
  /// N x size() design matrix, one basis row per input row.
  Eigen::MatrixXd design_matrix(const InputMatrix& inputs) const;

 private:
  BasisDegree degree_;
  std::size_t input_dimension_;
};

}  // namespace nowcast::gpr
