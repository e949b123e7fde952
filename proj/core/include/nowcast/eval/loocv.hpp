#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "nowcast/data/panel.hpp"
#include "nowcast/eval/metrics.hpp"
#include "nowcast/gpr/basis.hpp"
#include "nowcast/gpr/hyperparameters.hpp"
#include "nowcast/gpr/model.hpp"

namespace nowcast::eval {

/// Which panel column is the model input; the other is the target.
enum class Direction { ScoreToRate, RateToScore };

std::string_view to_string(Direction direction);
/// Accepts "score-to-rate" / "rate-to-score" (underscores also allowed).
Direction parse_direction(std::string_view text);

/// One-dimensional training set drawn from the panel in panel order.
gpr::TrainingSet training_set(const data::PanelDataset& panel, Direction direction);

/// Leave-one-out predictions with a fixed kernel: fold i trains on every row
/// except i and predicts row i. Folds run on up to `threads` workers; output is
/// in row order. Throws EvaluationError naming the first failing fold.
std::vector<PredictionPair> loocv_predictions(const gpr::TrainingSet& training,
                                              gpr::BasisDegree basis, const gpr::Kernel& kernel,
                                              std::size_t threads = 1);

/// Selects the kernel once on the whole panel, then runs the fixed-kernel
/// protocol above. Requires at least three rows.
std::vector<PredictionPair> loocv_predictions(const data::PanelDataset& panel, Direction direction,
                                              gpr::BasisDegree basis, const gpr::SearchConfig& search);

/// Fits once on every row and predicts the same rows.
std::vector<PredictionPair> in_sample_predictions(const gpr::TrainingSet& training,
                                                  gpr::BasisDegree basis, const gpr::Kernel& kernel);

}  // namespace nowcast::eval
