#include "nowcast/eval/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "nowcast/error.hpp"

namespace nowcast::eval {

namespace {

double mean_actual(std::span<const PredictionPair> pairs) {
  double sum = 0.0;
  for (const auto& p : pairs) sum += p.actual;
  return sum / static_cast<double>(pairs.size());
}

}  // namespace

double correlation_rate(std::span<const PredictionPair> pairs) {
  if (pairs.size() < 2) throw DomainError("correlation_rate: need at least two pairs");
  const double n = static_cast<double>(pairs.size());
  double mean_a = 0.0;
  double mean_p = 0.0;
  for (const auto& p : pairs) {
    mean_a += p.actual;
    mean_p += p.predicted;
  }
  mean_a /= n;
  mean_p /= n;

  double cross = 0.0;
  double ss_a = 0.0;
  double ss_p = 0.0;
  for (const auto& p : pairs) {
    const double da = p.actual - mean_a;
    const double dp = p.predicted - mean_p;
    cross += da * dp;
    ss_a += da * da;
    ss_p += dp * dp;
  }
  if (!(ss_a > 0.0) || !(ss_p > 0.0)) {
    throw DomainError("correlation_rate: undefined because a column has zero variance");
  }
  return std::clamp(cross / std::sqrt(ss_a * ss_p), -1.0, 1.0);
}

double rmse(std::span<const PredictionPair> pairs) {
  if (pairs.empty()) throw DomainError("rmse: no pairs");
  double sum_sq = 0.0;
  for (const auto& p : pairs) {
    const double r = p.predicted - p.actual;
    sum_sq += r * r;
  }
  return std::sqrt(sum_sq / static_cast<double>(pairs.size()));
}

double rae(std::span<const PredictionPair> pairs) {
  if (pairs.size() < 2) throw DomainError("rae: need at least two pairs");
  const double mean = mean_actual(pairs);
  double numerator = 0.0;
  double denominator = 0.0;
  for (const auto& p : pairs) {
    numerator += std::abs(p.predicted - p.actual);
    denominator += std::abs(p.actual - mean);
  }
  if (!(denominator > 0.0)) throw DomainError("rae: actual values are all equal");
  return numerator / denominator;
}

}  // namespace nowcast::eval
