#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nowcast::data {

/// The three third-party measurements collected per employment site.
enum class Signal { Rank, Trend, Traffic };

inline constexpr std::array<Signal, 3> kAllSignals{Signal::Rank, Signal::Trend, Signal::Traffic};

std::string_view to_string(Signal signal);

/// One employment website. Any signal may be missing until listwise deletion.
struct SiteRecord {
  std::string url;           // lowercase, unique within a dataset
  std::string country_code;  // ISO 3166 alpha-2, uppercase
  std::optional<std::int64_t> rank;  // >= 1, lower is more attractive
  std::optional<double> trend;       // >= 0
  std::optional<double> traffic;     // >= 0

  bool has(Signal signal) const noexcept;
  /// Signal value as a real number, if present.
  std::optional<double> value(Signal signal) const noexcept;
  bool complete() const noexcept;
  std::vector<Signal> missing() const;
};

struct CountryIndicator {
  std::string country_code;
  double unemployment_rate = 0.0;  // percent, [0, 100]
};

/// Trims surrounding whitespace and lowercases ASCII letters.
std::string normalize_url(std::string_view url);
bool is_country_code(std::string_view code) noexcept;

}  // namespace nowcast::data
