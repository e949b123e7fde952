#include "nowcast/synth.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "nowcast/error.hpp"

namespace nowcast::cli {

data::PanelDataset synthesize_panel(const SynthConfig& config) {
  if (config.n < 3) throw ConfigError("synth: n must be at least 3");
  if (!(config.coupling >= 0.0 && config.coupling <= 1.0)) {
    throw ConfigError("synth: coupling must lie in [0, 1]");
  }
  if (!(config.noise >= 0.0) || !std::isfinite(config.noise)) {
    throw ConfigError("synth: noise must be non-negative");
  }

  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> normal;
  const double independent = std::sqrt(1.0 - config.coupling * config.coupling);

  data::PanelDataset panel;
  panel.rows.reserve(config.n);
  for (std::size_t i = 0; i < config.n; ++i) {
    const double score = normal(rng);
    const double z = normal(rng);
    const double e = normal(rng);
    char url[40];
    std::snprintf(url, sizeof url, "site-%06zu.synthetic", i + 1);
    const double rate = kSynthRateMean +
                        kSynthRateScale * (config.coupling * score + independent * z) +
                        config.noise * e;
    panel.rows.push_back({url, "ZZ", score, rate, std::nullopt});
  }
  panel.provenance = {config.n, config.n, 0};
  return panel;
}

}  // namespace nowcast::cli
