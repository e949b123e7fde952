#include "nowcast/eval/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "nowcast/error.hpp"
#include "nowcast/format.hpp"

namespace nowcast::eval {

EvaluationReport evaluate(const data::PanelDataset& panel, Direction direction, gpr::BasisDegree basis,
                          const gpr::SearchConfig& search, const EvaluationOptions& options) {
  if (panel.size() < 3) {
    throw DomainError("evaluate: need at least three panel rows, got " + std::to_string(panel.size()));
  }
  const gpr::Kernel kernel = gpr::fit_hyperparameters(training_set(panel, direction),
                                                      gpr::BasisExpansion(basis, 1), search);
  return evaluate(panel, direction, basis, kernel, options);
}

EvaluationReport evaluate(const data::PanelDataset& panel, Direction direction, gpr::BasisDegree basis,
                          const gpr::Kernel& kernel, const EvaluationOptions& options) {
  if (panel.size() < 3) {
    throw DomainError("evaluate: need at least three panel rows, got " + std::to_string(panel.size()));
  }
  const gpr::TrainingSet training = training_set(panel, direction);

  EvaluationReport report;
  report.direction = direction;
  report.basis = basis;
  report.in_sample = options.in_sample;
  report.kernel = kernel;
  report.per_fold = options.in_sample ? in_sample_predictions(training, basis, kernel)
                                      : loocv_predictions(training, basis, kernel, options.threads);
  report.n = report.per_fold.size();
  report.correlation_rate = correlation_rate(report.per_fold);
  report.rmse = rmse(report.per_fold);
  report.rae = rae(report.per_fold);
  return report;
}

std::string report_to_json(const EvaluationReport& report,
                           const std::optional<data::PanelStatistics>& stats) {
  using nlohmann::json;
  json doc;
  doc["direction"] = std::string(to_string(report.direction));
  doc["basis"] = std::string(gpr::to_string(report.basis));
  doc["protocol"] = report.in_sample ? "in-sample" : "leave-one-out";
  doc["n"] = report.n;
  doc["correlation_rate"] = report.correlation_rate;
  doc["rmse"] = report.rmse;
  doc["rae"] = report.rae;
  doc["kernel"] = {{"sigma_sq", report.kernel.sigma_sq},
                   {"theta", report.kernel.theta},
                   {"jitter", report.kernel.jitter}};
  json folds = json::array();
  for (const auto& p : report.per_fold) folds.push_back({{"actual", p.actual}, {"predicted", p.predicted}});
  doc["per_fold"] = std::move(folds);
  if (stats) {
    auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
    doc["statistics"] = {{"raw_count", stats->raw_count},
                         {"clean_count", stats->clean_count},
                         {"unemployment_rate_mean", stats->rate_mean},
                         {"unemployment_rate_sd", opt(stats->rate_sd)},
                         {"rank_mean", opt(stats->rank_mean)},
                         {"rank_sd", opt(stats->rank_sd)}};
  }
  return doc.dump(2) + "\n";
}

std::string report_to_table(const EvaluationReport& report,
                            const std::optional<data::PanelStatistics>& stats) {
  std::ostringstream out;
  out << std::left << std::setw(66) << "Property" << "Value\n";
  if (stats) out << data::format_statistics(*stats);
  auto line = [&](const std::string& label, const std::string& value) {
    out << std::setw(66) << label << value << '\n';
  };
  line("Correlation Rate", shortest_repr(100.0 * report.correlation_rate) + "%");
  line("RMSE", shortest_repr(report.rmse));
  line("RAE", shortest_repr(report.rae));
  out << '\n';
  line("Direction", std::string(to_string(report.direction)));
  line("Protocol", report.in_sample ? "in-sample" : "leave-one-out");
  line("Basis", std::string(gpr::to_string(report.basis)));
  line("Observations", std::to_string(report.n));
  std::string theta;
  for (double t : report.kernel.theta) theta += (theta.empty() ? "" : " ") + shortest_repr(t);
  line("Kernel theta", theta);
  line("Kernel sigma_sq", shortest_repr(report.kernel.sigma_sq));
  line("Kernel jitter", shortest_repr(report.kernel.jitter));
  return out.str();
}

}  // namespace nowcast::eval
