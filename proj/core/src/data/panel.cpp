#include "nowcast/data/panel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "data/csv.hpp"
#include "nowcast/error.hpp"
#include "nowcast/format.hpp"

namespace nowcast::data {

namespace {

struct Moments {
  double mean = 0.0;
  std::optional<double> sd;
};

Moments moments(const std::vector<double>& values) {
  Moments m;
  for (double v : values) m.mean += v;
  m.mean /= static_cast<double>(values.size());
  if (values.size() >= 2) {
    double sum_sq = 0.0;
    for (double v : values) sum_sq += (v - m.mean) * (v - m.mean);
    m.sd = std::sqrt(sum_sq / static_cast<double>(values.size() - 1));
  }
  return m;
}

}  // namespace

PanelDataset build_panel(std::span<const SiteScore> scored, std::span<const SiteRecord> sites,
                         std::span<const CountryIndicator> indicators) {
  std::map<std::string_view, const SiteRecord*> site_by_url;
  for (const auto& s : sites) site_by_url.emplace(s.url, &s);
  std::map<std::string_view, double> rate_by_country;
  for (const auto& c : indicators) rate_by_country.emplace(c.country_code, c.unemployment_rate);

  PanelDataset panel;
  panel.rows.reserve(scored.size());
  std::set<std::string> unknown_countries;
  std::set<std::string_view> seen;
  for (const auto& s : scored) {
    const auto site = site_by_url.find(s.url);
    if (site == site_by_url.end()) {
      throw IntegrityError("build_panel: scored url '" + s.url + "' is not among the ingested sites");
    }
    if (!seen.insert(s.url).second) throw IntegrityError("build_panel: url '" + s.url + "' scored twice");
    const auto rate = rate_by_country.find(site->second->country_code);
    if (rate == rate_by_country.end()) {
      unknown_countries.insert(site->second->country_code);
      continue;
    }
    panel.rows.push_back({s.url, site->second->country_code, s.score, rate->second, site->second->rank});
  }
  if (!unknown_countries.empty()) {
    std::string list;
    for (const auto& c : unknown_countries) list += (list.empty() ? "" : ", ") + c;
    throw JoinError("no unemployment rate for countries: " + list);
  }

  std::sort(panel.rows.begin(), panel.rows.end(),
            [](const PanelRow& a, const PanelRow& b) { return a.url < b.url; });
  panel.provenance.raw_count = std::max(sites.size(), scored.size());
  panel.provenance.clean_count = panel.rows.size();
  panel.provenance.dropped_count = panel.provenance.raw_count - panel.provenance.clean_count;
  return panel;
}

PanelDataset country_mean_panel(const PanelDataset& panel) {
  struct Accumulator {
    double score_sum = 0.0;
    std::size_t count = 0;
    double rate = 0.0;
  };
  std::map<std::string, Accumulator> by_country;
  for (const auto& row : panel.rows) {
    auto& acc = by_country[row.country_code];
    acc.score_sum += row.score;
    acc.count += 1;
    acc.rate = row.unemployment_rate;
  }
  PanelDataset out;
  out.provenance = panel.provenance;
  for (const auto& [country, acc] : by_country) {
    out.rows.push_back({normalize_url(country), country, acc.score_sum / static_cast<double>(acc.count), acc.rate, std::nullopt});
  }
  return out;
}

void write_panel_csv(std::ostream& out, const PanelDataset& panel) {
  out << "url,country,score,unemployment_rate\n";
  for (const auto& row : panel.rows) {
    out << row.url << ',' << row.country_code << ',' << shortest_repr(row.score) << ','
        << shortest_repr(row.unemployment_rate) << '\n';
  }
}

PanelDataset read_panel_csv(std::istream& in, const std::string& source) {
  const auto rows = detail::read_csv(in, source, {"url", "country", "score", "unemployment_rate"});
  PanelDataset panel;
  std::set<std::string> seen;
  for (const auto& row : rows) {
    PanelRow r;
    r.url = normalize_url(row.cells[0]);
    if (r.url.empty()) throw ParseError(source, row.line, "url is empty");
    r.country_code = row.cells[1];
    if (!is_country_code(r.country_code)) {
      throw ParseError(source, row.line, "country '" + r.country_code + "' is not an ISO 3166 alpha-2 code");
    }
    r.score = detail::parse_real(row.cells[2], source, row.line, "score");
    r.unemployment_rate = detail::parse_real(row.cells[3], source, row.line, "unemployment_rate");
    if (!seen.insert(r.url).second) {
      throw IntegrityError(source + ":" + std::to_string(row.line) + ": duplicate url '" + r.url + "'");
    }
    panel.rows.push_back(std::move(r));
  }
  std::sort(panel.rows.begin(), panel.rows.end(),
            [](const PanelRow& a, const PanelRow& b) { return a.url < b.url; });
  panel.provenance = {panel.rows.size(), panel.rows.size(), 0};
  return panel;
}

PanelDataset load_panel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return read_panel_csv(in, path.string());
}

PanelStatistics describe_panel(const PanelDataset& panel) {
  if (panel.rows.empty()) throw DomainError("describe_panel: panel is empty");

  std::vector<double> rates;
  std::vector<double> ranks;
  for (const auto& row : panel.rows) {
    rates.push_back(row.unemployment_rate);
    if (row.rank) ranks.push_back(static_cast<double>(*row.rank));
  }

  PanelStatistics stats;
  stats.raw_count = panel.provenance.raw_count;
  stats.clean_count = panel.provenance.clean_count;
  const Moments rate = moments(rates);
  stats.rate_mean = rate.mean;
  stats.rate_sd = rate.sd;
  if (!ranks.empty()) {
    const Moments rank = moments(ranks);
    stats.rank_mean = rank.mean;
    stats.rank_sd = rank.sd;
  }
  return stats;
}

std::string format_statistics(const PanelStatistics& stats) {
  auto opt = [](const std::optional<double>& v) { return v ? shortest_repr(*v) : std::string("n/a"); };
  std::ostringstream out;
  out << std::left;
  auto line = [&](const std::string& label, const std::string& value) {
    out << std::setw(66) << label << value << '\n';
  };
  line("Number of Web Sites", std::to_string(stats.raw_count));
  line("Number of Web Sites after Imputation", std::to_string(stats.clean_count));
  line("Average Unemployment rate among the countries of the web sites", shortest_repr(stats.rate_mean));
  line("Standard Deviation of unemployment rate of web page", opt(stats.rate_sd));
  line("Average ranking of the web page", opt(stats.rank_mean));
  line("Standard Deviation of web page ranking", opt(stats.rank_sd));
  return out.str();
}

}  // namespace nowcast::data
