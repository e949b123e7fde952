#include <gtest/gtest.h>

#include <random>

#include "nowcast/data/clean.hpp"
#include "nowcast/data/ingest.hpp"

namespace nowcast::data {
namespace {

SiteRecord site(std::string url, std::optional<std::int64_t> rank, std::optional<double> trend,
                std::optional<double> traffic) {
  return {std::move(url), "DE", rank, trend, traffic};
}

TEST(ListwiseDelete, DropsRecordMissingTraffic) {
  const auto result = listwise_delete({site("a.de", 10, 55.0, std::nullopt)});
  EXPECT_TRUE(result.kept.empty());
  EXPECT_EQ(result.dropped_count, 1u);
  ASSERT_EQ(result.dropped.size(), 1u);
  EXPECT_EQ(describe(result.dropped[0]), "a.de: missing traffic");
}

TEST(ListwiseDelete, KeepsCompleteRecordsInOrder) {
  const auto result = listwise_delete({site("b.de", 1, 2.0, 3.0), site("x.de", std::nullopt, std::nullopt, 1.0),
                                       site("a.de", 4, 5.0, 6.0)});
  ASSERT_EQ(result.kept.size(), 2u);
  EXPECT_EQ(result.kept[0].url, "b.de");
  EXPECT_EQ(result.kept[1].url, "a.de");
  EXPECT_EQ(describe(result.dropped[0]), "x.de: missing rank, trend");
}

TEST(ListwiseDelete, BundledFixtureKeeps382Of427) {
  const auto sites = ingest_sites(std::string(NOWCAST_DATA_DIR) + "/fixture/sites.csv");
  ASSERT_EQ(sites.size(), 427u);
  const auto result = listwise_delete(sites);
  EXPECT_EQ(result.kept.size(), 382u);
  EXPECT_EQ(result.dropped_count, 45u);
}

TEST(ListwiseDelete, ConservationIdempotenceCompleteness) {
  std::mt19937_64 rng(9);
  std::bernoulli_distribution present(0.8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SiteRecord> records;
    for (int i = 0; i < 30; ++i) {
      records.push_back(site("s" + std::to_string(i) + ".de",
                             present(rng) ? std::optional<std::int64_t>(i + 1) : std::nullopt,
                             present(rng) ? std::optional<double>(i) : std::nullopt,
                             present(rng) ? std::optional<double>(2.0 * i) : std::nullopt));
    }
    const auto once = listwise_delete(records);
    EXPECT_EQ(once.kept.size() + once.dropped_count, records.size());
    for (const auto& r : once.kept) {
      EXPECT_TRUE(r.rank.has_value());
      EXPECT_TRUE(r.trend.has_value());
      EXPECT_TRUE(r.traffic.has_value());
    }
    const auto twice = listwise_delete(once.kept);
    EXPECT_EQ(twice.dropped_count, 0u);
    ASSERT_EQ(twice.kept.size(), once.kept.size());
    for (std::size_t i = 0; i < once.kept.size(); ++i) EXPECT_EQ(twice.kept[i].url, once.kept[i].url);
  }
}

}  // namespace
}  // namespace nowcast::data
