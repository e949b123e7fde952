#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nowcast/data/site_record.hpp"

namespace nowcast::data {

// sites.csv:       url,country,rank,trend,traffic   (empty cell = missing)
// indicators.csv:  country,unemployment_rate        (percent)
//
// Malformed rows raise ParseError with the 1-based line number; duplicate urls
// or countries raise IntegrityError.

std::vector<SiteRecord> read_sites(std::istream& in, const std::string& source);
std::vector<SiteRecord> ingest_sites(const std::filesystem::path& path);
void write_sites(std::ostream& out, std::span<const SiteRecord> records);

std::vector<CountryIndicator> read_indicators(std::istream& in, const std::string& source);
std::vector<CountryIndicator> ingest_indicators(const std::filesystem::path& path);

}  // namespace nowcast::data
