// Catmull-Rom tricubic interpolation with periodic index wrapping.
#include "interp.hpp"

#include <cmath>

#include "errors.hpp"

namespace tpns {

namespace {

/// Catmull-Rom weights for the four taps at offsets -1, 0, 1, 2.
void cr_weights(double u, double w[4]) {
    const double u2 = u * u;
    const double u3 = u2 * u;
    w[0] = 0.5 * (-u3 + 2.0 * u2 - u);
    w[1] = 0.5 * (3.0 * u3 - 5.0 * u2 + 2.0);
    w[2] = 0.5 * (-3.0 * u3 + 4.0 * u2 + u);
    w[3] = 0.5 * (u3 - u2);
}

int wrap(int i, int np) {
    int r = i % np;
    return r < 0 ? r + np : r;
}

} // namespace

Interp3::Interp3(std::vector<double> values, int np, double box_half_length)
    : v_(std::move(values)), np_(np), L_(box_half_length),
      hp_(2.0 * box_half_length / np) {
    if (np < 4 || v_.size() != (size_t)np * np * np)
        throw ConfigError("Interp3: sample cube size mismatch");
}

double Interp3::at(const Vec3& x) const {
    int base[3];
    double w[3][4];
    for (int a = 0; a < 3; ++a) {
        const double u = (x[a] + L_) / hp_;
        const double fu = std::floor(u);
        base[a] = (int)fu;
        cr_weights(u - fu, w[a]);
    }
    double acc = 0.0;
    for (int d1 = -1; d1 <= 2; ++d1) {
        const int i1 = wrap(base[0] + d1, np_);
        const double w1 = w[0][d1 + 1];
        for (int d2 = -1; d2 <= 2; ++d2) {
            const int i2 = wrap(base[1] + d2, np_);
            const double w12 = w1 * w[1][d2 + 1];
            for (int d3 = -1; d3 <= 2; ++d3) {
                const int i3 = wrap(base[2] + d3, np_);
                acc += w12 * w[2][d3 + 1] *
                       v_[((size_t)i1 * np_ + i2) * np_ + i3];
            }
        }
    }
    return acc;
}

} // namespace tpns
