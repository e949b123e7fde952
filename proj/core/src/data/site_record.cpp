#include "nowcast/data/site_record.hpp"

#include <algorithm>

namespace nowcast::data {

std::string_view to_string(Signal signal) {
  switch (signal) {
    case Signal::Rank: return "rank";
    case Signal::Trend: return "trend";
    case Signal::Traffic: return "traffic";
  }
  return "unknown";
}

bool SiteRecord::has(Signal signal) const noexcept { return value(signal).has_value(); }

std::optional<double> SiteRecord::value(Signal signal) const noexcept {
  switch (signal) {
    case Signal::Rank:
      if (rank) return static_cast<double>(*rank);
      return std::nullopt;
    case Signal::Trend: return trend;
    case Signal::Traffic: return traffic;
  }
  return std::nullopt;
}

bool SiteRecord::complete() const noexcept { return rank && trend && traffic; }

std::vector<Signal> SiteRecord::missing() const {
  std::vector<Signal> out;
  for (Signal s : kAllSignals) {
    if (!has(s)) out.push_back(s);
  }
  return out;
}

std::string normalize_url(std::string_view url) {
  const auto first = url.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = url.find_last_not_of(" \t");
  std::string out(url.substr(first, last - first + 1));
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
  });
  return out;
}

bool is_country_code(std::string_view code) noexcept {
  return code.size() == 2 && std::all_of(code.begin(), code.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
}

}  // namespace nowcast::data
