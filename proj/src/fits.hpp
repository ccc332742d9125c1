// Power-law decay fits on log-log axes: value ~ c * r^{-alpha}.
#pragma once

#include <vector>

namespace tpns {

/// Result of a least-squares decay fit.
struct DecayFit {
    double alpha = 0.0;     ///< fitted decay exponent (positive = decaying)
    double c_fit = 0.0;     ///< fitted amplitude
    double r_squared = 0.0; ///< coefficient of determination in log space
};

/// Ordinary least squares of log(value) against log(radius).
/// Requires at least 4 samples, strictly increasing radii spanning a factor
/// of at least 4, and strictly positive values; throws ConfigError otherwise.
DecayFit fit_decay(const std::vector<double>& radii,
                   const std::vector<double>& values);

} // namespace tpns
