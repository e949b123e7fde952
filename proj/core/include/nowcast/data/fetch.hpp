#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nowcast/data/site_record.hpp"
#include "nowcast/error.hpp"

namespace nowcast::data {

/// Transient failure retrieving one signal (timeout, HTTP error, ...).
class FetchError : public Error {
 public:
  using Error::Error;
};

/// Source of per-site signals. Implementations must tolerate concurrent fetch()
/// calls.
class SignalFetcher {
 public:
  virtual ~SignalFetcher() = default;

  /// Called once before any fetch; throws ConfigError on bad endpoints or credentials.
  virtual void validate() const {}

  /// Returns nullopt when the source has no value; throws FetchError on failure.
  virtual std::optional<double> fetch(const std::string& url, Signal signal) const = 0;
};

struct SiteSignals {
  std::string url;
  std::optional<std::int64_t> rank;
  std::optional<double> trend;
  std::optional<double> traffic;
};

struct FetchOptions {
  std::size_t parallelism = 4;
};

/// Fetches every signal for every url. Individual failures and out-of-range
/// values become missing fields. Output is sorted by url regardless of
/// completion order. Throws IntegrityError on duplicate urls.
std::vector<SiteSignals> fetch_signals(std::span<const std::string> urls,
                                       const SignalFetcher& fetcher, FetchOptions options = {});

/// Replaces the signals of every site that was fetched; other sites are untouched.
std::vector<SiteRecord> apply_signals(std::vector<SiteRecord> sites,
                                      std::span<const SiteSignals> fetched);

/// Serves recorded signals from a JSON map url -> {rank, trend, traffic}, with
/// null marking a missing value. Unknown urls fail with FetchError.
class ReplayFetcher final : public SignalFetcher {
 public:
  ReplayFetcher(std::string_view json, const std::string& source);
  static ReplayFetcher from_file(const std::filesystem::path& path);

  std::optional<double> fetch(const std::string& url, Signal signal) const override;
  std::size_t size() const noexcept { return recorded_.size(); }

 private:
  struct Recorded {
    std::optional<double> rank;
    std::optional<double> trend;
    std::optional<double> traffic;
  };
  std::map<std::string, Recorded, std::less<>> recorded_;
};

}  // namespace nowcast::data
