#pragma once

#include <string>

namespace nowcast {

/// Shortest decimal string that parses back to exactly `value`.
std::string shortest_repr(double value);

}  // namespace nowcast
