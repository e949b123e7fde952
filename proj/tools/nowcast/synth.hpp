#pragma once

#include <cstdint>

#include "nowcast/data/panel.hpp"

namespace nowcast::cli {

struct SynthConfig {
  std::size_t n = 100;
  double coupling = 0.5;  // population correlation of score with the noise-free rate
  double noise = 0.0;     // standard deviation of additive rate noise, percentage points
  std::uint64_t seed = 20131029;
};

inline constexpr double kSynthRateMean = 7.7;
inline constexpr double kSynthRateScale = 2.5;

/// Synthetic panel: score ~ N(0, 1) and
///   rate = 7.7 + 2.5 * (coupling * score + sqrt(1 - coupling^2) * z) + noise * e
/// with z, e independent standard normals, so the population correlation of
/// score and rate is coupling * 2.5 / sqrt(2.5^2 + noise^2), i.e. exactly
/// `coupling` when noise is zero. Throws ConfigError for n < 3, coupling
/// outside [0, 1] or negative noise.
data::PanelDataset synthesize_panel(const SynthConfig& config);

}  // namespace nowcast::cli
