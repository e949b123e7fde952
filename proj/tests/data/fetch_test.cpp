#include <gtest/gtest.h>

#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "nowcast/data/fetch.hpp"
#include "nowcast/data/ingest.hpp"
#include "nowcast/error.hpp"

namespace nowcast::data {
namespace {

// Serves fixed values; optionally times out on one url's traffic endpoint and
// sleeps in reverse url order so completion order differs from input order.
class ScriptedFetcher final : public SignalFetcher {
 public:
  std::string timeout_url;
  bool misconfigured = false;
  mutable std::atomic<int> calls{0};

  void validate() const override {
    if (misconfigured) throw ConfigError("bad endpoint");
  }

  std::optional<double> fetch(const std::string& url, Signal signal) const override {
    ++calls;
    std::this_thread::sleep_for(std::chrono::microseconds(200 * (url.empty() ? 0 : 'z' - url[0])));
    if (url == timeout_url && signal == Signal::Traffic) throw FetchError("timed out");
    switch (signal) {
      case Signal::Rank: return 10.0 + static_cast<double>(url.size());
      case Signal::Trend: return 50.0;
      case Signal::Traffic: return 1000.0;
    }
    return std::nullopt;
  }
};

TEST(FetchSignals, HappyPathFillsEverything) {
  ScriptedFetcher fetcher;
  const std::vector<std::string> urls{"b.de", "a.fr"};
  const auto out = fetch_signals(urls, fetcher);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].url, "a.fr");
  EXPECT_EQ(out[1].url, "b.de");
  for (const auto& s : out) EXPECT_TRUE(s.rank && s.trend && s.traffic);
}

TEST(FetchSignals, TimeoutLeavesFieldMissing) {
  ScriptedFetcher fetcher;
  fetcher.timeout_url = "b.de";
  const std::vector<std::string> urls{"a.fr", "b.de", "c.it"};
  const auto out = fetch_signals(urls, fetcher);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_FALSE(out[1].traffic.has_value());
  EXPECT_TRUE(out[1].rank && out[1].trend);
  EXPECT_TRUE(out[0].traffic && out[2].traffic);
}

TEST(FetchSignals, EmptyInputIsEmptyOutput) {
  ScriptedFetcher fetcher;
  EXPECT_TRUE(fetch_signals({}, fetcher).empty());
  EXPECT_EQ(fetcher.calls.load(), 0);
}

TEST(FetchSignals, ConfigurationErrorBeforeAnyFetch) {
  ScriptedFetcher fetcher;
  fetcher.misconfigured = true;
  const std::vector<std::string> urls{"a.fr"};
  EXPECT_THROW(fetch_signals(urls, fetcher), ConfigError);
  EXPECT_EQ(fetcher.calls.load(), 0);
}

TEST(FetchSignals, OrderIndependentOfParallelism) {
  ScriptedFetcher fetcher;
  std::vector<std::string> urls;
  for (char c = 'a'; c <= 'p'; ++c) urls.push_back(std::string(1, c) + ".example");
  std::reverse(urls.begin(), urls.end());
  const auto serial = fetch_signals(urls, fetcher, {1});
  const auto parallel = fetch_signals(urls, fetcher, {8});
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].url, parallel[i].url);
    EXPECT_EQ(serial[i].rank, parallel[i].rank);
  }
  EXPECT_TRUE(std::is_sorted(serial.begin(), serial.end(),
                             [](const auto& a, const auto& b) { return a.url < b.url; }));
}

TEST(FetchSignals, DuplicateUrlsRejected) {
  ScriptedFetcher fetcher;
  const std::vector<std::string> urls{"a.fr", "A.fr"};
  EXPECT_THROW(fetch_signals(urls, fetcher), IntegrityError);
}

TEST(ReplayFetcher, ServesRecordedValuesAndNulls) {
  const ReplayFetcher fetcher(R"({"a.fr": {"rank": 3, "trend": null, "traffic": 12.5},
                                  "B.DE": {"rank": 2.5, "trend": 1, "traffic": -4}})",
                              "inline");
  EXPECT_EQ(fetcher.size(), 2u);
  const std::vector<std::string> urls{"a.fr", "b.de", "zz.it"};
  const auto out = fetch_signals(urls, fetcher);
  EXPECT_EQ(out[0].rank, 3);
  EXPECT_FALSE(out[0].trend.has_value());
  EXPECT_EQ(out[0].traffic, 12.5);
  EXPECT_FALSE(out[1].rank.has_value()) << "non-integer rank is not a valid ranking";
  EXPECT_FALSE(out[1].traffic.has_value()) << "negative traffic is discarded";
  EXPECT_FALSE(out[2].rank || out[2].trend || out[2].traffic) << "unknown url fails every fetch";
}

TEST(ReplayFetcher, MalformedFixtureIsConfigError) {
  EXPECT_THROW(ReplayFetcher("[1,2]", "x"), ConfigError);
  EXPECT_THROW(ReplayFetcher("{\"a\": {\"rank\": \"high\"}}", "x"), ConfigError);
  EXPECT_THROW(ReplayFetcher("{", "x"), ConfigError);
  EXPECT_THROW(ReplayFetcher::from_file("/nonexistent.json"), ConfigError);
}

TEST(ApplySignals, BundledReplayReproducesCsvSignals) {
  const std::string dir = std::string(NOWCAST_DATA_DIR) + "/fixture/";
  const auto reference = ingest_sites(dir + "sites.csv");
  const auto bare = ingest_sites(dir + "site_list.csv");
  const auto fetcher = ReplayFetcher::from_file(dir + "signals.json");

  std::vector<std::string> urls;
  for (const auto& s : bare) urls.push_back(s.url);
  const auto filled = apply_signals(bare, fetch_signals(urls, fetcher, {4}));
  ASSERT_EQ(filled.size(), reference.size());
  for (std::size_t i = 0; i < filled.size(); ++i) {
    EXPECT_EQ(filled[i].url, reference[i].url);
    EXPECT_EQ(filled[i].rank, reference[i].rank);
    EXPECT_EQ(filled[i].trend, reference[i].trend);
    EXPECT_EQ(filled[i].traffic, reference[i].traffic);
  }
}

}  // namespace
}  // namespace nowcast::data
