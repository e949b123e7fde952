#include "nowcast/data/clean.hpp"

namespace nowcast::data {

DeletionResult listwise_delete(std::vector<SiteRecord> records) {
  DeletionResult result;
  result.kept.reserve(records.size());
  for (auto& record : records) {
    if (record.complete()) {
      result.kept.push_back(std::move(record));
    } else {
      result.dropped.push_back({record.url, record.missing()});
    }
  }
  result.dropped_count = result.dropped.size();
  return result;
}

std::string describe(const DroppedRecord& dropped) {
  std::string out = dropped.url + ": missing ";
  for (std::size_t i = 0; i < dropped.missing.size(); ++i) {
    if (i) out += ", ";
    out += to_string(dropped.missing[i]);
  }
  return out;
}

}  // namespace nowcast::data
