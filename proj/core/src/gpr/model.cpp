#include "nowcast/gpr/model.hpp"

#include <cmath>
#include <string>

#include "gpr/gls.hpp"
#include "nowcast/error.hpp"

namespace nowcast::gpr {

namespace {

constexpr double kMinGlsRcond = 1e-13;

bool usable_factor(const Eigen::LLT<Eigen::MatrixXd>& llt) {
  if (llt.info() != Eigen::Success) return false;
  const auto diag = llt.matrixLLT().diagonal();
  return diag.allFinite() && (diag.array() > 0.0).all();
}

}  // namespace

void TrainingSet::validate() const {
  if (targets.size() == 0) throw ShapeError("training set is empty");
  if (inputs.cols() == 0) throw ShapeError("training inputs have no columns");
  if (inputs.rows() != targets.size()) {
    throw ShapeError("training set has " + std::to_string(inputs.rows()) + " input rows but " +
                     std::to_string(targets.size()) + " targets");
  }
  if (!inputs.allFinite() || !targets.allFinite()) {
    throw DomainError("training set contains missing or non-finite values");
  }
}

std::vector<double> jitter_schedule(double initial) {
  std::vector<double> schedule{initial};
  double step = initial > 0.0 ? initial : kDefaultJitter;
  if (initial > 0.0) step *= 10.0;
  // The 1e-9 slack lets repeated x10 land on kMaxJitter despite rounding.
  while (step <= kMaxJitter * (1.0 + 1e-9)) {
    schedule.push_back(step);
    step *= 10.0;
  }
  return schedule;
}

namespace detail {

GlsSolution solve_gls(const InputMatrix& inputs, const Eigen::VectorXd& targets,
                      const Eigen::MatrixXd& design, const Kernel& kernel) {
  const Eigen::MatrixXd cov = build_covariance(inputs, kernel);
  const Eigen::Index n = cov.rows();

  GlsSolution gls;
  bool factored = false;
  for (double jitter : jitter_schedule(kernel.jitter)) {
    Eigen::MatrixXd regularized = cov;
    regularized.diagonal().array() += jitter * kernel.sigma_sq;
    gls.covariance_factor.compute(regularized);
    if (usable_factor(gls.covariance_factor)) {
      gls.jitter = jitter;
      factored = true;
      break;
    }
  }
  if (!factored) {
    throw FitError("covariance of " + std::to_string(n) +
                   " points is not positive definite even with jitter " +
                   std::to_string(kMaxJitter));
  }

  const auto lower = gls.covariance_factor.matrixL();
  gls.whitened_basis = lower.solve(design);
  const Eigen::VectorXd whitened_targets = lower.solve(targets);

  gls.gls_factor.compute(gls.whitened_basis.transpose() * gls.whitened_basis);
  if (!usable_factor(gls.gls_factor) || gls.gls_factor.rcond() < kMinGlsRcond) {
    throw FitError("generalized least-squares system is singular (basis functions are "
                   "linearly dependent on the training inputs)");
  }
  gls.beta = gls.gls_factor.solve(gls.whitened_basis.transpose() * whitened_targets);
  gls.whitened_residual = whitened_targets - gls.whitened_basis * gls.beta;
  return gls;
}

}  // namespace detail

GprModel::GprModel(TrainingSet training, Kernel kernel, BasisExpansion basis)
    : training_(std::move(training)), kernel_(std::move(kernel)), basis_(basis) {}

Eigen::MatrixXd GprModel::chol() const {
  return covariance_factor_.matrixL();
}

GprModel fit(TrainingSet training, BasisExpansion basis, Kernel kernel) {
  training.validate();
  kernel.validate();
  if (kernel.dimension() != training.dimension()) {
    throw ShapeError("fit: kernel has " + std::to_string(kernel.dimension()) +
                     " correlation lengths but inputs have " +
                     std::to_string(training.dimension()) + " columns");
  }
  if (basis.input_dimension() != training.dimension()) {
    throw ShapeError("fit: basis expects dimension " + std::to_string(basis.input_dimension()));
  }
  if (basis.size() > training.size()) {
    throw FitError("fit: " + std::to_string(basis.size()) + " basis functions need at least as many points, got " +
                   std::to_string(training.size()));
  }

  const Eigen::MatrixXd design = basis.design_matrix(training.inputs);
  detail::GlsSolution gls = detail::solve_gls(training.inputs, training.targets, design, kernel);

  kernel.jitter = gls.jitter;
  GprModel model(std::move(training), std::move(kernel), basis);
  model.alpha_ = gls.covariance_factor.matrixU().solve(gls.whitened_residual);
  model.covariance_factor_ = std::move(gls.covariance_factor);
  model.whitened_basis_ = std::move(gls.whitened_basis);
  model.gls_factor_ = std::move(gls.gls_factor);
  model.beta_ = std::move(gls.beta);
  return model;
}

PredictionTerms GprModel::predict_terms(std::span<const double> x_new) const {
  const CovarianceBorder border = extend_covariance(training_.inputs, x_new, kernel_);
  const Eigen::VectorXd f = basis_.evaluate(x_new);

  PredictionTerms terms;
  terms.trend = f.dot(beta_);
  terms.correction = border.k.dot(alpha_);
  terms.prior_variance = border.kappa;

  const Eigen::VectorXd v = covariance_factor_.matrixL().solve(border.k);
  terms.explained = v.squaredNorm();
  const Eigen::VectorXd u = f - whitened_basis_.transpose() * v;
  const Eigen::VectorXd w = gls_factor_.matrixL().solve(u);
  terms.basis_variance = w.squaredNorm();
  return terms;
}

Prediction GprModel::predict(std::span<const double> x_new) const {
  const PredictionTerms terms = predict_terms(x_new);
  Prediction out{terms.mean(), terms.variance()};
  if (out.variance < 0.0) {
    out.variance = 0.0;
    diagnostics_->clamped.fetch_add(1, std::memory_order_relaxed);
  }
  return out;
}

}  // namespace nowcast::gpr
