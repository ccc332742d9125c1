// Forcing implementation.
#include "forcing.hpp"

#include <cmath>

#include "errors.hpp"

namespace tpns {

void ForcingSpec::validate() const {
    if (!(radius > 0.0))
        throw ConfigError("forcing.radius must be positive");
    if (profile == Profile::cosine && k0 < 1)
        throw ConfigError("forcing.k0 must be >= 1 for the cosine profile");
    if (profile == Profile::mixed && weights.empty())
        throw ConfigError("forcing.weights must be nonempty for the mixed profile");
}

double bump_value(double u2) {
    if (u2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - u2));
}

double profile_value(const ForcingSpec& fs, double t, double period) {
    double w = 2.0 * M_PI / period;
    switch (fs.profile) {
        case ForcingSpec::Profile::constant: return 1.0;
        case ForcingSpec::Profile::cosine: return std::cos(fs.k0 * w * t);
        case ForcingSpec::Profile::mixed: {
            double acc = 0.0;
            for (size_t j = 0; j < fs.weights.size(); ++j)
                acc += fs.weights[j] * std::cos((double)j * w * t);
            return acc;
        }
    }
    return 0.0;
}

double profile_mode_coeff(const ForcingSpec& fs, int k) {
    int ka = std::abs(k);
    switch (fs.profile) {
        case ForcingSpec::Profile::constant: return (k == 0) ? 1.0 : 0.0;
        case ForcingSpec::Profile::cosine:
            return (ka == fs.k0) ? 0.5 : 0.0;
        case ForcingSpec::Profile::mixed:
            if (ka >= (int)fs.weights.size()) return 0.0;
            return (k == 0) ? fs.weights[0] : 0.5 * fs.weights[ka];
    }
    return 0.0;
}

Field sample_forcing(const Grid& g, const ForcingSpec& fs) {
    fs.validate();
    double cdist = std::sqrt(fs.center[0] * fs.center[0] +
                             fs.center[1] * fs.center[1] +
                             fs.center[2] * fs.center[2]);
    if (cdist + fs.radius > 0.5 * g.par.box_half_length)
        throw ConfigError(
            "forcing support must fit inside |x| <= box_half_length/2");

    Field f(g, 3, Repr::physical);
    const int n = g.n;
    double inv_r2 = 1.0 / (fs.radius * fs.radius);
    for (int s = 0; s < g.nt; ++s) {
        double prof = profile_value(fs, s * g.dt, g.par.period);
        for (int i1 = 0; i1 < n; ++i1) {
            double d1 = g.x_map[i1] - fs.center[0];
            for (int i2 = 0; i2 < n; ++i2) {
                double d2 = g.x_map[i2] - fs.center[1];
                for (int i3 = 0; i3 < n; ++i3) {
                    double d3 = g.x_map[i3] - fs.center[2];
                    double u2 = (d1 * d1 + d2 * d2 + d3 * d3) * inv_r2;
                    double psi = bump_value(u2);
                    if (psi == 0.0) continue;
                    size_t base = f.idx(s, i1, i2, i3, 0);
                    double v = psi * prof;
                    f.data[base] = fs.amplitude[0] * v;
                    f.data[base + 1] = fs.amplitude[1] * v;
                    f.data[base + 2] = fs.amplitude[2] * v;
                }
            }
        }
    }
    return f;
}

double spectral_tail_fraction(const Grid& g, const Field& spec) {
    spec.require(g, Repr::spectral, "spectral_tail_fraction");
    const int n = g.n;
    double inside = 0.0, outside = 0.0;
    for (int s = 0; s < g.nt; ++s)
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3) {
                    size_t base = spec.idx(s, i1, i2, i3, 0);
                    double m2 = 0.0;
                    for (int c = 0; c < spec.comps; ++c)
                        m2 += std::norm(spec.data[base + c]);
                    if (g.in_band(s, i1, i2, i3))
                        inside += m2;
                    else
                        outside += m2;
                }
    double total = inside + outside;
    return total > 0.0 ? std::sqrt(outside / total) : 0.0;
}

double nyquist_tail_ratio(const Grid& g, const Field& spec) {
    spec.require(g, Repr::spectral, "nyquist_tail_ratio");
    const int half = g.n / 2;
    double peak = 0.0, nyq = 0.0;
    for (int s = 0; s < g.nt; ++s)
        for (int i1 = 0; i1 < g.n; ++i1)
            for (int i2 = 0; i2 < g.n; ++i2)
                for (int i3 = 0; i3 < g.n; ++i3) {
                    const bool at_nyq =
                        (i1 == half) || (i2 == half) || (i3 == half);
                    const size_t base = spec.idx(s, i1, i2, i3, 0);
                    for (int c = 0; c < spec.comps; ++c) {
                        const double a = std::abs(spec.data[base + c]);
                        if (a > peak) peak = a;
                        if (at_nyq && a > nyq) nyq = a;
                    }
                }
    return peak > 0.0 ? nyq / peak : 0.0;
}

} // namespace tpns
