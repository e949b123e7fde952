#include "nowcast/data/ingest.hpp"

#include <fstream>
#include <map>
#include <ostream>

#include "data/csv.hpp"
#include "nowcast/error.hpp"
#include "nowcast/format.hpp"

namespace nowcast::data {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return in;
}

}  // namespace

std::vector<SiteRecord> read_sites(std::istream& in, const std::string& source) {
  const auto rows = detail::read_csv(in, source, {"url", "country", "rank", "trend", "traffic"});

  std::vector<SiteRecord> records;
  records.reserve(rows.size());
  std::map<std::string, std::size_t, std::less<>> first_seen;
  for (const auto& row : rows) {
    SiteRecord record;
    record.url = normalize_url(row.cells[0]);
    if (record.url.empty()) throw ParseError(source, row.line, "url is empty");
    record.country_code = row.cells[1];
    if (!is_country_code(record.country_code)) {
      throw ParseError(source, row.line, "country '" + record.country_code + "' is not an ISO 3166 alpha-2 code");
    }
    record.rank = detail::parse_optional_integer(row.cells[2], source, row.line, "rank");
    if (record.rank && *record.rank < 1) throw ParseError(source, row.line, "rank must be at least 1");
    record.trend = detail::parse_optional_real(row.cells[3], source, row.line, "trend");
    if (record.trend && *record.trend < 0.0) throw ParseError(source, row.line, "trend must be non-negative");
    record.traffic = detail::parse_optional_real(row.cells[4], source, row.line, "traffic");
    if (record.traffic && *record.traffic < 0.0) throw ParseError(source, row.line, "traffic must be non-negative");

    const auto [it, inserted] = first_seen.emplace(record.url, row.line);
    if (!inserted) {
      throw IntegrityError(source + ":" + std::to_string(row.line) + ": duplicate url '" + record.url +
                           "' (first seen on line " + std::to_string(it->second) + ")");
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<SiteRecord> ingest_sites(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_sites(in, path.string());
}

void write_sites(std::ostream& out, std::span<const SiteRecord> records) {
  out << "url,country,rank,trend,traffic\n";
  for (const auto& r : records) {
    out << r.url << ',' << r.country_code << ',';
    if (r.rank) out << *r.rank;
    out << ',';
    if (r.trend) out << shortest_repr(*r.trend);
    out << ',';
    if (r.traffic) out << shortest_repr(*r.traffic);
    out << '\n';
  }
}

std::vector<CountryIndicator> read_indicators(std::istream& in, const std::string& source) {
  const auto rows = detail::read_csv(in, source, {"country", "unemployment_rate"});

  std::vector<CountryIndicator> indicators;
  std::map<std::string, std::size_t, std::less<>> first_seen;
  for (const auto& row : rows) {
    CountryIndicator indicator;
    indicator.country_code = row.cells[0];
    if (!is_country_code(indicator.country_code)) {
      throw ParseError(source, row.line, "country '" + indicator.country_code + "' is not an ISO 3166 alpha-2 code");
    }
    indicator.unemployment_rate = detail::parse_real(row.cells[1], source, row.line, "unemployment_rate");
    if (indicator.unemployment_rate < 0.0 || indicator.unemployment_rate > 100.0) {
      throw ParseError(source, row.line, "unemployment_rate must be a percentage in [0, 100]");
    }
    const auto [it, inserted] = first_seen.emplace(indicator.country_code, row.line);
    if (!inserted) {
      throw IntegrityError(source + ":" + std::to_string(row.line) + ": duplicate country '" +
                           indicator.country_code + "' (first seen on line " + std::to_string(it->second) + ")");
    }
    indicators.push_back(std::move(indicator));
  }
  return indicators;
}

std::vector<CountryIndicator> ingest_indicators(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_indicators(in, path.string());
}

}  // namespace nowcast::data
