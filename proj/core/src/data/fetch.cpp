#include "nowcast/data/fetch.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "parallel.hpp"

namespace nowcast::data {

namespace {

std::optional<double> try_fetch(const SignalFetcher& fetcher, const std::string& url, Signal signal) {
  std::optional<double> value;
  try {
    value = fetcher.fetch(url, signal);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (value && (!std::isfinite(*value) || *value < 0.0)) return std::nullopt;
  return value;
}

std::optional<std::int64_t> as_rank(std::optional<double> value) {
  if (!value || *value < 1.0 || *value > 9.0e15 || std::floor(*value) != *value) return std::nullopt;
  return static_cast<std::int64_t>(*value);
}

}  // namespace

std::vector<SiteSignals> fetch_signals(std::span<const std::string> urls,
                                       const SignalFetcher& fetcher, FetchOptions options) {
  fetcher.validate();

  std::vector<std::string> keys;
  keys.reserve(urls.size());
  for (const auto& url : urls) keys.push_back(normalize_url(url));
  std::vector<std::string> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw IntegrityError("fetch_signals: duplicate url '" + *dup + "'");
  }

  std::vector<SiteSignals> out(sorted.size());
  nowcast::detail::parallel_for(sorted.size(), options.parallelism, [&](std::size_t i) {
    SiteSignals& s = out[i];
    s.url = sorted[i];
    s.rank = as_rank(try_fetch(fetcher, s.url, Signal::Rank));
    s.trend = try_fetch(fetcher, s.url, Signal::Trend);
    s.traffic = try_fetch(fetcher, s.url, Signal::Traffic);
  });
  return out;
}

std::vector<SiteRecord> apply_signals(std::vector<SiteRecord> sites,
                                      std::span<const SiteSignals> fetched) {
  std::map<std::string_view, const SiteSignals*> by_url;
  for (const auto& s : fetched) by_url.emplace(s.url, &s);
  for (auto& site : sites) {
    const auto it = by_url.find(site.url);
    if (it == by_url.end()) continue;
    site.rank = it->second->rank;
    site.trend = it->second->trend;
    site.traffic = it->second->traffic;
  }
  return sites;
}

ReplayFetcher::ReplayFetcher(std::string_view text, const std::string& source) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(source + ": invalid replay fixture: " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(source + ": replay fixture must be a JSON object keyed by url");

  auto field = [&](const json& entry, const char* name, const std::string& url) -> std::optional<double> {
    if (!entry.contains(name) || entry.at(name).is_null()) return std::nullopt;
    if (!entry.at(name).is_number()) {
      throw ConfigError(source + ": '" + url + "'." + name + " must be a number or null");
    }
    return entry.at(name).get<double>();
  };
  for (const auto& [url, entry] : doc.items()) {
    if (!entry.is_object()) throw ConfigError(source + ": entry for '" + url + "' must be an object");
    recorded_[normalize_url(url)] =
        Recorded{field(entry, "rank", url), field(entry, "trend", url), field(entry, "traffic", url)};
  }
}

ReplayFetcher ReplayFetcher::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open replay fixture");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ReplayFetcher(buffer.str(), path.string());
}

std::optional<double> ReplayFetcher::fetch(const std::string& url, Signal signal) const {
  const auto it = recorded_.find(url);
  if (it == recorded_.end()) throw FetchError("no recording for '" + url + "'");
  switch (signal) {
    case Signal::Rank: return it->second.rank;
    case Signal::Trend: return it->second.trend;
    case Signal::Traffic: return it->second.traffic;
  }
  return std::nullopt;
}

}  // namespace nowcast::data
