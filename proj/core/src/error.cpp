#include "nowcast/error.hpp"

namespace nowcast {

namespace {

std::string located(const std::string& source, std::size_t line, const std::string& what) {
  if (line == 0) return source + ": " + what;
  return source + ":" + std::to_string(line) + ": " + what;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : Error(located(source, line, what)), line_(line) {}

EvaluationError::EvaluationError(std::size_t fold, const std::string& what)
    : Error("fold " + std::to_string(fold) + ": " + what), fold_(fold) {}

}  // namespace nowcast
