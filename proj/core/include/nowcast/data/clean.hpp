#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nowcast/data/site_record.hpp"

namespace nowcast::data {

struct DroppedRecord {
  std::string url;
  std::vector<Signal> missing;
};

struct DeletionResult {
  std::vector<SiteRecord> kept;
  std::size_t dropped_count = 0;
  std::vector<DroppedRecord> dropped;
};

/// Keeps a record only if rank, trend and traffic are all present. Order is preserved.
DeletionResult listwise_delete(std::vector<SiteRecord> records);

/// "url: missing trend, traffic"
std::string describe(const DroppedRecord& dropped);

}  // namespace nowcast::data
