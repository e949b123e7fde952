#include "nowcast/gpr/kernel.hpp"

#include <cmath>
#include <string>

#include "nowcast/error.hpp"

namespace nowcast::gpr {

void Kernel::validate() const {
  if (!(sigma_sq > 0.0) || !std::isfinite(sigma_sq)) {
    throw DomainError("kernel: sigma_sq must be positive and finite");
  }
  if (theta.empty()) throw DomainError("kernel: theta must have at least one dimension");
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (!(theta[i] > 0.0) || !std::isfinite(theta[i])) {
      throw DomainError("kernel: theta[" + std::to_string(i) + "] must be positive and finite");
    }
  }
  if (!(jitter >= 0.0) || !std::isfinite(jitter)) {
    throw DomainError("kernel: jitter must be non-negative");
  }
}

Kernel Kernel::isotropic(double sigma_sq, double theta, std::size_t dimension, double jitter) {
  return Kernel{sigma_sq, std::vector<double>(dimension, theta), jitter};
}

double kernel_correlation(std::span<const double> a, std::span<const double> b,
                          const Kernel& kernel) {
  if (a.size() != kernel.theta.size() || b.size() != kernel.theta.size()) {
    throw ShapeError("kernel_correlation: expected inputs of dimension " +
                     std::to_string(kernel.theta.size()) + ", got " + std::to_string(a.size()) +
                     " and " + std::to_string(b.size()));
  }
  double exponent = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    exponent += diff * diff / kernel.theta[i];
  }
  return std::exp(-exponent);
}

}  // namespace nowcast::gpr
