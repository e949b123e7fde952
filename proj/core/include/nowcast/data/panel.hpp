#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nowcast/data/score.hpp"
#include "nowcast/data/site_record.hpp"

namespace nowcast::data {

struct PanelRow {
  std::string url;
  std::string country_code;
  double score = 0.0;
  double unemployment_rate = 0.0;
  std::optional<std::int64_t> rank;  // raw rank, kept for descriptive statistics only
};

/// Site counts through the cleaning stage. raw_count = clean_count + dropped_count.
struct Provenance {
  std::size_t raw_count = 0;
  std::size_t clean_count = 0;
  std::size_t dropped_count = 0;
};

/// Two-column panel (score, unemployment rate) keyed by url, sorted by url.
struct PanelDataset {
  std::vector<PanelRow> rows;
  Provenance provenance;

  std::size_t size() const noexcept { return rows.size(); }
};

/// Pairs each scored site with its country's unemployment rate. `sites` is the
/// raw (pre-deletion) record list and fixes raw_count. Throws JoinError naming
/// every country missing from `indicators`.
PanelDataset build_panel(std::span<const SiteScore> scored, std::span<const SiteRecord> sites,
                         std::span<const CountryIndicator> indicators);

/// One row per country with the mean site score; url holds the lowercased
/// country code.
/// Provenance still counts sites.
PanelDataset country_mean_panel(const PanelDataset& panel);

// panel.csv: url,country,score,unemployment_rate   (shortest round-trip decimals)
void write_panel_csv(std::ostream& out, const PanelDataset& panel);
PanelDataset read_panel_csv(std::istream& in, const std::string& source);
PanelDataset load_panel(const std::filesystem::path& path);

struct PanelStatistics {
  std::size_t raw_count = 0;
  std::size_t clean_count = 0;
  double rate_mean = 0.0;
  std::optional<double> rate_sd;  // sample standard deviation; undefined for one row
  std::optional<double> rank_mean;
  std::optional<double> rank_sd;
};

/// Throws DomainError on an empty panel.
PanelStatistics describe_panel(const PanelDataset& panel);
/// Two-column "Property / Value" block with one line per statistic.
std::string format_statistics(const PanelStatistics& stats);

}  // namespace nowcast::data
