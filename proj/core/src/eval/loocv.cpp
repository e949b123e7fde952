#include "nowcast/eval/loocv.hpp"

#include <string>

#include "nowcast/error.hpp"
#include "parallel.hpp"

namespace nowcast::eval {

std::string_view to_string(Direction direction) {
  return direction == Direction::ScoreToRate ? "score-to-rate" : "rate-to-score";
}

Direction parse_direction(std::string_view text) {
  if (text == "score-to-rate" || text == "score_to_rate") return Direction::ScoreToRate;
  if (text == "rate-to-score" || text == "rate_to_score") return Direction::RateToScore;
  throw ConfigError("unknown direction '" + std::string(text) +
                    "' (expected score-to-rate or rate-to-score)");
}

gpr::TrainingSet training_set(const data::PanelDataset& panel, Direction direction) {
  gpr::TrainingSet training;
  const auto n = static_cast<Eigen::Index>(panel.size());
  training.inputs.resize(n, 1);
  training.targets.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = panel.rows[static_cast<std::size_t>(i)];
    const bool forward = direction == Direction::ScoreToRate;
    training.inputs(i, 0) = forward ? row.score : row.unemployment_rate;
    training.targets[i] = forward ? row.unemployment_rate : row.score;
  }
  return training;
}

std::vector<PredictionPair> loocv_predictions(const gpr::TrainingSet& training,
                                              gpr::BasisDegree basis, const gpr::Kernel& kernel,
                                              std::size_t threads) {
  training.validate();
  const auto n = static_cast<Eigen::Index>(training.size());
  if (n < 3) throw DomainError("leave-one-out needs at least three rows, got " + std::to_string(n));
  const gpr::BasisExpansion expansion(basis, training.dimension());

  std::vector<PredictionPair> pairs(static_cast<std::size_t>(n));
  nowcast::detail::parallel_for(pairs.size(), threads, [&](std::size_t fold) {
    const auto held_out = static_cast<Eigen::Index>(fold);
    gpr::TrainingSet rest;
    rest.inputs.resize(n - 1, training.inputs.cols());
    rest.targets.resize(n - 1);
    for (Eigen::Index src = 0, dst = 0; src < n; ++src) {
      if (src == held_out) continue;
      rest.inputs.row(dst) = training.inputs.row(src);
      rest.targets[dst] = training.targets[src];
      ++dst;
    }
    try {
      const gpr::GprModel model = gpr::fit(std::move(rest), expansion, kernel);
      pairs[fold] = {training.targets[held_out],
                     model.predict(gpr::row_span(training.inputs, held_out)).mean};
    } catch (const Error& e) {
      throw EvaluationError(fold, e.what());
    }
  });
  return pairs;
}

std::vector<PredictionPair> loocv_predictions(const data::PanelDataset& panel, Direction direction,
                                              gpr::BasisDegree basis, const gpr::SearchConfig& search) {
  if (panel.size() < 3) {
    throw DomainError("leave-one-out needs at least three panel rows, got " + std::to_string(panel.size()));
  }
  const gpr::TrainingSet training = training_set(panel, direction);
  const gpr::Kernel kernel =
      gpr::fit_hyperparameters(training, gpr::BasisExpansion(basis, 1), search);
  return loocv_predictions(training, basis, kernel, search.threads);
}

std::vector<PredictionPair> in_sample_predictions(const gpr::TrainingSet& training,
                                                  gpr::BasisDegree basis, const gpr::Kernel& kernel) {
  const gpr::GprModel model = gpr::fit(training, gpr::BasisExpansion(basis, training.dimension()), kernel);
  std::vector<PredictionPair> pairs;
  pairs.reserve(training.size());
  for (Eigen::Index i = 0; i < training.inputs.rows(); ++i) {
    pairs.push_back({training.targets[i], model.predict(gpr::row_span(training.inputs, i)).mean});
  }
  return pairs;
}

}  // namespace nowcast::eval
