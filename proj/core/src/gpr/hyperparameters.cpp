#include "nowcast/gpr/hyperparameters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "gpr/gls.hpp"
#include "nowcast/error.hpp"
#include "parallel.hpp"

namespace nowcast::gpr {

void SearchConfig::validate() const {
  if (steps == 0) throw ConfigError("theta grid is empty (steps must be at least 1)");
  if (!(theta_lo > 0.0) || !std::isfinite(theta_lo) || !std::isfinite(theta_hi)) {
    throw ConfigError("theta grid bounds must be positive and finite");
  }
  if (theta_hi < theta_lo) throw ConfigError("theta grid lower bound exceeds upper bound");
  if (steps > 1 && theta_hi == theta_lo) {
    throw ConfigError("theta grid with several steps needs lower < upper");
  }
  if (!(jitter >= 0.0)) throw ConfigError("jitter must be non-negative");
}

std::vector<double> SearchConfig::grid() const {
  validate();
  std::vector<double> values(steps);
  if (steps == 1) {
    values[0] = theta_lo;
    return values;
  }
  const double log_lo = std::log(theta_lo);
  const double log_span = std::log(theta_hi) - log_lo;
  for (std::size_t i = 0; i < steps; ++i) {
    values[i] = std::exp(log_lo + log_span * static_cast<double>(i) / static_cast<double>(steps - 1));
  }
  values.front() = theta_lo;
  values.back() = theta_hi;
  return values;
}

double SearchConfig::step_ratio() const {
  if (steps <= 1) return 1.0;
  return std::pow(theta_hi / theta_lo, 1.0 / static_cast<double>(steps - 1));
}

double sigma_sq_floor(const TrainingSet& training) {
  const double mean_square = training.targets.squaredNorm() / static_cast<double>(training.size());
  return 1e-12 * std::max(1.0, mean_square);
}

ProfileLikelihood profile_log_likelihood(const TrainingSet& training, const BasisExpansion& basis,
                                         const std::vector<double>& theta, double jitter) {
  training.validate();
  const Kernel unit{1.0, theta, jitter};
  unit.validate();
  if (unit.dimension() != training.dimension()) {
    throw ShapeError("profile_log_likelihood: theta has " + std::to_string(theta.size()) +
                     " entries but inputs have " + std::to_string(training.dimension()) + " columns");
  }
  if (basis.size() > training.size()) {
    throw FitError("profile_log_likelihood: more basis functions than training points");
  }

  const Eigen::MatrixXd design = basis.design_matrix(training.inputs);
  const detail::GlsSolution gls = detail::solve_gls(training.inputs, training.targets, design, unit);

  const double n = static_cast<double>(training.size());
  const double quadratic = gls.whitened_residual.squaredNorm();
  const double sigma_sq = std::max(quadratic / n, sigma_sq_floor(training));
  const double log_det =
      2.0 * gls.covariance_factor.matrixLLT().diagonal().array().log().sum();

  ProfileLikelihood out;
  out.sigma_sq = sigma_sq;
  out.jitter = gls.jitter;
  out.log_likelihood =
      -0.5 * (n * std::log(2.0 * std::numbers::pi * sigma_sq) + log_det + quadratic / sigma_sq);
  return out;
}

namespace {

// Enumerates theta vectors in lexicographic order of grid indices.
std::vector<std::vector<double>> candidate_thetas(const std::vector<double>& grid,
                                                  std::size_t dimension, bool per_dimension) {
  std::vector<std::vector<double>> cells;
  if (!per_dimension) {
    cells.reserve(grid.size());
    for (double t : grid) cells.emplace_back(dimension, t);
    return cells;
  }
  std::vector<std::size_t> index(dimension, 0);
  while (true) {
    std::vector<double> theta(dimension);
    for (std::size_t i = 0; i < dimension; ++i) theta[i] = grid[index[i]];
    cells.push_back(std::move(theta));
    std::size_t pos = dimension;
    while (pos > 0) {
      --pos;
      if (++index[pos] < grid.size()) break;
      index[pos] = 0;
      if (pos == 0) return cells;
    }
  }
}

}  // namespace

Kernel fit_hyperparameters(const TrainingSet& training, const BasisExpansion& basis,
                           const SearchConfig& search) {
  training.validate();
  const std::vector<double> grid = search.grid();
  const auto cells = candidate_thetas(grid, training.dimension(), search.per_dimension);

  std::vector<std::optional<ProfileLikelihood>> scores(cells.size());
  nowcast::detail::parallel_for(cells.size(), search.threads, [&](std::size_t i) {
    try {
      scores[i] = profile_log_likelihood(training, basis, cells[i], search.jitter);
    } catch (const FitError&) {
      scores[i].reset();
    }
  });

  // Strict comparison in grid order keeps the smallest theta on ties.
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!scores[i] || !std::isfinite(scores[i]->log_likelihood)) continue;
    if (!best || scores[i]->log_likelihood > scores[*best]->log_likelihood) best = i;
  }
  if (!best) {
    throw FitError("hyperparameter search: covariance could not be factorized for any of " +
                   std::to_string(cells.size()) + " grid cells");
  }
  return Kernel{scores[*best]->sigma_sq, cells[*best], scores[*best]->jitter};
}

}  // namespace nowcast::gpr
