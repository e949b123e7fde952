#include "nowcast/data/score.hpp"

#include <cmath>
#include <string>

#include "nowcast/error.hpp"

namespace nowcast::data {

std::vector<SiteScore> normalize_and_score(std::span<const SiteRecord> records,
                                           std::span<const Signal> signals) {
  if (records.size() < 2) throw DomainError("normalize_and_score: need at least two records");
  if (signals.empty()) throw DomainError("normalize_and_score: no signals selected");

  const std::size_t n = records.size();
  std::vector<double> scores(n, 0.0);
  std::vector<double> column(n);
  for (Signal signal : signals) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = records[i].value(signal);
      if (!v) {
        throw DomainError("normalize_and_score: record '" + records[i].url + "' has no " +
                          std::string(to_string(signal)));
      }
      column[i] = signal == Signal::Rank ? -*v : *v;
    }

    double mean = 0.0;
    for (double v : column) mean += v;
    mean /= static_cast<double>(n);
    double sum_sq = 0.0;
    for (double v : column) sum_sq += (v - mean) * (v - mean);
    const double sd = std::sqrt(sum_sq / static_cast<double>(n - 1));
    if (!(sd > 0.0) || !std::isfinite(sd)) {
      throw NormalizationError("signal column '" + std::string(to_string(signal)) +
                               "' has zero variance and cannot be standardized");
    }
    for (std::size_t i = 0; i < n; ++i) scores[i] += (column[i] - mean) / sd;
  }

  std::vector<SiteScore> out;
  out.reserve(n);
  const double count = static_cast<double>(signals.size());
  for (std::size_t i = 0; i < n; ++i) out.push_back({records[i].url, scores[i] / count});
  return out;
}

}  // namespace nowcast::data
