// Decay-fit implementation.
#include "fits.hpp"

#include <cmath>

#include "errors.hpp"

namespace tpns {

DecayFit fit_decay(const std::vector<double>& radii,
                   const std::vector<double>& values) {
    const size_t n = radii.size();
    if (values.size() != n)
        throw ConfigError("fit_decay: radii/values length mismatch");
    if (n < 4) throw ConfigError("fit_decay: at least 4 samples required");
    for (size_t i = 0; i + 1 < n; ++i)
        if (!(radii[i + 1] > radii[i]))
            throw ConfigError("fit_decay: radii must be strictly increasing");
    if (!(radii[0] > 0.0))
        throw ConfigError("fit_decay: radii must be positive");
    if (radii[n - 1] < 4.0 * radii[0])
        throw ConfigError("fit_decay: radii must span at least a factor of 4");
    for (double v : values)
        if (!(v > 0.0))
            throw ConfigError("fit_decay: values must be strictly positive");

    double sx = 0.0, sy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sx += std::log(radii[i]);
        sy += std::log(values[i]);
    }
    double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double dx = std::log(radii[i]) - mx;
        double dy = std::log(values[i]) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    double slope = sxy / sxx;
    double intercept = my - slope * mx;
    DecayFit out;
    out.alpha = -slope;
    out.c_fit = std::exp(intercept);
    if (syy > 0.0) {
        double ssres = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double pred = intercept + slope * std::log(radii[i]);
            double res = std::log(values[i]) - pred;
            ssres += res * res;
        }
        out.r_squared = 1.0 - ssres / syy;
    } else {
        out.r_squared = 1.0; // constant data fitted exactly
    }
    return out;
}

} // namespace tpns
