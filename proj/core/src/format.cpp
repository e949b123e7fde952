#include "nowcast/format.hpp"

#include <array>
#include <charconv>

namespace nowcast {

std::string shortest_repr(double value) {
  std::array<char, 32> buffer{};
  auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buffer.data(), end);
}

}  // namespace nowcast
