#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "nowcast/eval/loocv.hpp"
#include "nowcast/gpr/basis.hpp"
#include "nowcast/gpr/hyperparameters.hpp"

namespace nowcast::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitParse = 2,
  kExitIntegrity = 3,
  kExitFit = 4,
  kExitEvaluation = 5,
};

struct ThetaGrid {
  double lo = 1e-2;
  double hi = 1e2;
  std::size_t steps = 25;
};

/// "LO:HI:STEPS", e.g. "1e-2:1e2:25". Throws ConfigError.
ThetaGrid parse_theta_grid(std::string_view text);

struct RunConfig {
  std::filesystem::path sites;
  std::filesystem::path indicators;
  std::filesystem::path fetcher;  // replay fixture; empty = signals come from the sites file
  std::filesystem::path panel;
  std::filesystem::path out;
  eval::Direction direction = eval::Direction::ScoreToRate;
  gpr::BasisDegree basis = gpr::BasisDegree::Constant;
  ThetaGrid grid;
  double jitter = gpr::kDefaultJitter;
  std::uint64_t seed = 20131029;
  std::size_t threads = 1;
  bool in_sample = false;
  bool country_mean = false;
  std::size_t n = 100;
  double coupling = 0.5;
  double noise = 0.0;

  gpr::SearchConfig search() const;
};

/// Every flag any subcommand accepts. The help text must document exactly these.
inline constexpr std::array<std::string_view, 17> kRunConfigFlags = {
    "--sites",  "--indicators", "--fetcher", "--panel",     "--out",
    "--direction", "--basis",   "--theta-grid", "--jitter", "--seed",
    "--threads", "--in-sample", "--country-mean", "--n",    "--coupling",
    "--noise",  "--help",
};

/// Top-level help followed by the help of every subcommand.
std::string help_text();

/// Runs one invocation; args exclude the program name. Returns the exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nowcast::cli
