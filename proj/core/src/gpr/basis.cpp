#include "nowcast/gpr/basis.hpp"

#include <string>

#include "nowcast/error.hpp"

namespace nowcast::gpr {

std::string_view to_string(BasisDegree degree) {
  return degree == BasisDegree::Constant ? "const" : "linear";
}

BasisDegree parse_basis_degree(std::string_view text) {
  if (text == "const" || text == "constant") return BasisDegree::Constant;
  if (text == "linear") return BasisDegree::Linear;
  throw ConfigError("unknown basis '" + std::string(text) + "' (expected const or linear)");
}

BasisExpansion::BasisExpansion(BasisDegree degree, std::size_t input_dimension)
    : degree_(degree), input_dimension_(input_dimension) {
  if (input_dimension == 0) throw ShapeError("basis: input dimension must be at least 1");
}

std::size_t BasisExpansion::size() const noexcept {
  return degree_ == BasisDegree::Constant ? 1 : 1 + input_dimension_;
}

Eigen::VectorXd BasisExpansion::evaluate(std::span<const double> x) const {
  if (x.size() != input_dimension_) {
    throw ShapeError("basis: point has dimension " + std::to_string(x.size()) + ", expected " +
                     std::to_string(input_dimension_));
  }
  Eigen::VectorXd f(static_cast<Eigen::Index>(size()));
  f[0] = 1.0;
  if (degree_ == BasisDegree::Linear) {
    for (std::size_t i = 0; i < x.size(); ++i) f[static_cast<Eigen::Index>(i) + 1] = x[i];
  }
  return f;
}

Eigen::MatrixXd BasisExpansion::design_matrix(const InputMatrix& inputs) const {
  if (static_cast<std::size_t>(inputs.cols()) != input_dimension_) {
    throw ShapeError("basis: inputs have " + std::to_string(inputs.cols()) + " columns, expected " +
                     std::to_string(input_dimension_));
  }
  Eigen::MatrixXd design(inputs.rows(), static_cast<Eigen::Index>(size()));
  design.col(0).setOnes();
  if (degree_ == BasisDegree::Linear) design.rightCols(inputs.cols()) = inputs;
  return design;
}

}  // namespace nowcast::gpr
