#pragma once

#include <span>
#include <string>
#include <vector>

#include "nowcast/data/site_record.hpp"

namespace nowcast::data {

struct SiteScore {
  std::string url;
  double score = 0.0;
};

/// Standardizes each chosen signal to mean 0 and sample standard deviation 1
/// (rank negated first so larger always means more attractive) and averages
/// them into one score per site.
///
/// Throws DomainError for fewer than two records or a record lacking a chosen
/// signal, NormalizationError for a zero-variance column.
std::vector<SiteScore> normalize_and_score(std::span<const SiteRecord> records,
                                           std::span<const Signal> signals = kAllSignals);

}  // namespace nowcast::data
