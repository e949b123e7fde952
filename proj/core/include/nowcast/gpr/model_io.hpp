#pragma once

#include <string>
#include <string_view>

#include "nowcast/gpr/model.hpp"

namespace nowcast::gpr {

inline constexpr int kModelFormatVersion = 1;

/// Versioned JSON document holding everything needed to rebuild the model.
std::string model_to_json(const GprModel& model);

/// Refits from the stored kernel and training data. Throws ParseError on a
/// malformed or unsupported document and IntegrityError if the recomputed
/// coefficients disagree with the stored ones.
GprModel model_from_json(std::string_view json);

}  // namespace nowcast::gpr
