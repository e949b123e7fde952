#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nowcast::data::detail {

struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> cells;
};

// Plain comma-separated text: no quoting, CR/LF tolerant, blank lines skipped,
// optional UTF-8 BOM. The header must match `expected_header` exactly and every
// row must have the same number of cells.
std::vector<CsvRow> read_csv(std::istream& in, const std::string& source,
                             const std::vector<std::string_view>& expected_header);

std::optional<double> parse_optional_real(std::string_view cell, const std::string& source,
                                          std::size_t line, std::string_view column);
double parse_real(std::string_view cell, const std::string& source, std::size_t line,
                  std::string_view column);
std::optional<std::int64_t> parse_optional_integer(std::string_view cell, const std::string& source,
                                                   std::size_t line, std::string_view column);

}  // namespace nowcast::data::detail
