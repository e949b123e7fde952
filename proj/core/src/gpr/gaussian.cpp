#include "nowcast/gpr/gaussian.hpp"

#include <cmath>
#include <numbers>

#include "nowcast/error.hpp"

namespace nowcast::gpr {

double gaussian_pdf(double y, double mu, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("gaussian_pdf: sigma must be positive");
  const double z = (y - mu) / sigma;
  return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

}  // namespace nowcast::gpr
