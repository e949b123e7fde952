#pragma once

namespace nowcast::gpr {

/// Normal probability density with mean `mu` and standard deviation `sigma`.
/// Throws DomainError unless sigma > 0.
double gaussian_pdf(double y, double mu, double sigma);

}  // namespace nowcast::gpr
