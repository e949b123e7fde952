#include "data/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>

#include "nowcast/error.hpp"

namespace nowcast::data::detail {

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.emplace_back(line.substr(start));
      return cells;
    }
    cells.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string join(const std::vector<std::string_view>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

}  // namespace

std::vector<CsvRow> read_csv(std::istream& in, const std::string& source,
                             const std::vector<std::string_view>& expected_header) {
  std::vector<CsvRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (line.empty()) continue;
    if (line.find('"') != std::string::npos) {
      throw ParseError(source, line_no, "quoted fields are not supported");
    }
    auto cells = split(line);
    if (!header_seen) {
      const std::vector<std::string_view> header(cells.begin(), cells.end());
      if (header != expected_header) {
        throw ParseError(source, line_no, "expected header '" + join(expected_header) + "', got '" + line + "'");
      }
      header_seen = true;
      continue;
    }
    if (cells.size() != expected_header.size()) {
      throw ParseError(source, line_no, "expected " + std::to_string(expected_header.size()) +
                                            " cells, got " + std::to_string(cells.size()));
    }
    rows.push_back({line_no, std::move(cells)});
  }
  if (!header_seen) throw ParseError(source, 0, "file is empty (missing header)");
  return rows;
}

std::optional<double> parse_optional_real(std::string_view cell, const std::string& source,
                                          std::size_t line, std::string_view column) {
  if (cell.empty()) return std::nullopt;
  return parse_real(cell, source, line, column);
}

double parse_real(std::string_view cell, const std::string& source, std::size_t line,
                  std::string_view column) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || end != cell.data() + cell.size() || !std::isfinite(value)) {
    throw ParseError(source, line, std::string(column) + ": '" + std::string(cell) + "' is not a number");
  }
  return value;
}

std::optional<std::int64_t> parse_optional_integer(std::string_view cell, const std::string& source,
                                                   std::size_t line, std::string_view column) {
  if (cell.empty()) return std::nullopt;
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || end != cell.data() + cell.size()) {
    throw ParseError(source, line, std::string(column) + ": '" + std::string(cell) + "' is not an integer");
  }
  return value;
}

}  // namespace nowcast::data::detail
