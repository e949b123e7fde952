#pragma once

#include <span>

namespace nowcast::eval {

struct PredictionPair {
  double actual = 0.0;
  double predicted = 0.0;
};

/// Pearson correlation between actual and predicted values, clamped to [-1, 1].
/// Throws DomainError for fewer than two pairs or a zero-variance column.
double correlation_rate(std::span<const PredictionPair> pairs);

/// Root mean squared residual. Throws DomainError on empty input.
double rmse(std::span<const PredictionPair> pairs);

/// Relative absolute error: sum |predicted - actual| / sum |actual - mean(actual)|.
/// 1.0 is the score of always predicting the mean. Throws DomainError for fewer
/// than two pairs or constant actuals.
double rae(std::span<const PredictionPair> pairs);

}  // namespace nowcast::eval
