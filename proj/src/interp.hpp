// Local tricubic interpolation of periodic samples on a refined cube, used to
// read spectrally padded fields at off-lattice quadrature nodes.
#pragma once

#include <vector>

#include "oseen.hpp"

namespace tpns {

/// Catmull-Rom tricubic interpolant over an np^3 periodic sample cube on
/// [-L, L)^3 (samples at x = -L + (2L/np) * i, lexicographic i1, i2, i3).
class Interp3 {
public:
    Interp3(std::vector<double> values, int np, double box_half_length);

    /// Interpolated value at x (periodically wrapped).
    double at(const Vec3& x) const;

private:
    std::vector<double> v_;
    int np_;
    double L_;
    double hp_;
};

} // namespace tpns
