#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nowcast/data/panel.hpp"
#include "nowcast/eval/loocv.hpp"
#include "nowcast/eval/metrics.hpp"
#include "nowcast/gpr/hyperparameters.hpp"

namespace nowcast::eval {

struct EvaluationOptions {
  /// Score the full-data fit on its own training rows instead of leave-one-out.
  bool in_sample = false;
  std::size_t threads = 1;
};

struct EvaluationReport {
  Direction direction = Direction::ScoreToRate;
  gpr::BasisDegree basis = gpr::BasisDegree::Constant;
  bool in_sample = false;
  std::size_t n = 0;
  double correlation_rate = 0.0;
  double rmse = 0.0;
  double rae = 0.0;
  gpr::Kernel kernel;
  std::vector<PredictionPair> per_fold;
};

/// Selects hyperparameters on the full panel, cross-validates and scores.
EvaluationReport evaluate(const data::PanelDataset& panel, Direction direction, gpr::BasisDegree basis,
                          const gpr::SearchConfig& search, const EvaluationOptions& options = {});

/// Same, with hyperparameters already chosen.
EvaluationReport evaluate(const data::PanelDataset& panel, Direction direction, gpr::BasisDegree basis,
                          const gpr::Kernel& kernel, const EvaluationOptions& options = {});

std::string report_to_json(const EvaluationReport& report,
                           const std::optional<data::PanelStatistics>& stats = std::nullopt);
/// Human-readable "Property / Value" table; statistics rows are included when given.
std::string report_to_table(const EvaluationReport& report,
                            const std::optional<data::PanelStatistics>& stats = std::nullopt);

}  // namespace nowcast::eval
