// Multiplier operator implementation.
#include "multipliers.hpp"

#include <cmath>

#include "errors.hpp"

namespace tpns {

Multipliers::Multipliers(const Grid& g) : g_(g) {
    const int n = g_.n;
    xi2_.resize((size_t)n * n * n);
    size_t q = 0;
    for (int i1 = 0; i1 < n; ++i1) {
        double a = g_.xi_map[i1] * g_.xi_map[i1];
        for (int i2 = 0; i2 < n; ++i2) {
            double b = a + g_.xi_map[i2] * g_.xi_map[i2];
            for (int i3 = 0; i3 < n; ++i3, ++q)
                xi2_[q] = b + g_.xi_map[i3] * g_.xi_map[i3];
        }
    }
}

void Multipliers::helmholtz(Field& v) const {
    v.require(g_, Repr::spectral, "helmholtz");
    if (v.comps != 3) throw ConfigError("helmholtz: 3-component field required");
    const int n = g_.n;
    for (int s = 0; s < g_.nt; ++s) {
        size_t q = 0;
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3, ++q) {
                    double x2 = xi2_[q];
                    if (x2 == 0.0) continue;
                    size_t base = v.idx(s, i1, i2, i3, 0);
                    cd dot = g_.xi_map[i1] * v.data[base] +
                             g_.xi_map[i2] * v.data[base + 1] +
                             g_.xi_map[i3] * v.data[base + 2];
                    cd f = dot / x2;
                    v.data[base] -= g_.xi_map[i1] * f;
                    v.data[base + 1] -= g_.xi_map[i2] * f;
                    v.data[base + 2] -= g_.xi_map[i3] * f;
                }
    }
}

Field Multipliers::steady_inverse(const Field& g) const {
    g.require(g_, Repr::spectral, "steady_inverse");
    if (g.comps != 3)
        throw ConfigError("steady_inverse: 3-component field required");
    Field out(g_, 3, Repr::spectral);
    const int n = g_.n;
    const double lam = g_.par.lambda;
    // Locate the k = 0 plane (storage index s = 0).
    size_t q = 0;
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int i3 = 0; i3 < n; ++i3, ++q) {
                double x2 = xi2_[q];
                size_t base = g.idx(0, i1, i2, i3, 0);
                if (x2 == 0.0) continue; // mean-free: stays zero
                cd v0 = g.data[base], v1 = g.data[base + 1],
                   v2 = g.data[base + 2];
                cd dot = g_.xi_map[i1] * v0 + g_.xi_map[i2] * v1 +
                         g_.xi_map[i3] * v2;
                cd f = dot / x2;
                v0 -= g_.xi_map[i1] * f;
                v1 -= g_.xi_map[i2] * f;
                v2 -= g_.xi_map[i3] * f;
                cd denom(x2, -lam * g_.xi_map[i1]);
                out.data[base] = v0 / denom;
                out.data[base + 1] = v1 / denom;
                out.data[base + 2] = v2 / denom;
            }
    return out;
}

Field Multipliers::oscillatory_inverse(const Field& g) const {
    g.require(g_, Repr::spectral, "oscillatory_inverse");
    Field out(g_, g.comps, Repr::spectral);
    const int n = g_.n;
    const double lam = g_.par.lambda;
    for (int s = 0; s < g_.nt; ++s) {
        if (g_.k_map[s] == 0) continue; // annihilated
        double kap = g_.kap_map[s];
        size_t q = 0;
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3, ++q) {
                    cd denom(xi2_[q], kap - lam * g_.xi_map[i1]);
                    size_t base = g.idx(s, i1, i2, i3, 0);
                    for (int c = 0; c < g.comps; ++c)
                        out.data[base + c] = g.data[base + c] / denom;
                }
    }
    return out;
}

Field Multipliers::pressure(const Field& g) const {
    g.require(g_, Repr::spectral, "pressure");
    if (g.comps != 3) throw ConfigError("pressure: 3-component field required");
    Field out(g_, 1, Repr::spectral);
    const int n = g_.n;
    for (int s = 0; s < g_.nt; ++s) {
        size_t q = 0;
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3, ++q) {
                    double x2 = xi2_[q];
                    if (x2 == 0.0) continue;
                    size_t base = g.idx(s, i1, i2, i3, 0);
                    cd dot = g_.xi_map[i1] * g.data[base] +
                             g_.xi_map[i2] * g.data[base + 1] +
                             g_.xi_map[i3] * g.data[base + 2];
                    out.data[out.idx(s, i1, i2, i3, 0)] =
                        cd(0.0, -1.0) * dot / x2;
                }
    }
    return out;
}

void Multipliers::dealias(Field& f) const {
    f.require(g_, Repr::spectral, "dealias");
    const int n = g_.n;
    for (int s = 0; s < g_.nt; ++s) {
        bool kill_s = std::abs(g_.k_map[s]) > g_.band_k;
        for (int i1 = 0; i1 < n; ++i1) {
            bool kill_1 = kill_s || std::abs(g_.m_map[i1]) > g_.band_m;
            for (int i2 = 0; i2 < n; ++i2) {
                bool kill_2 = kill_1 || std::abs(g_.m_map[i2]) > g_.band_m;
                for (int i3 = 0; i3 < n; ++i3) {
                    if (!(kill_2 || std::abs(g_.m_map[i3]) > g_.band_m))
                        continue;
                    size_t base = f.idx(s, i1, i2, i3, 0);
                    for (int c = 0; c < f.comps; ++c)
                        f.data[base + c] = cd(0.0, 0.0);
                }
            }
        }
    }
}

cd Multipliers::osc_denom(int s, int i1, int i2, int i3) const {
    size_t q = (((size_t)i1 * g_.n) + i2) * g_.n + i3;
    return cd(xi2_[q], g_.kap_map[s] - g_.par.lambda * g_.xi_map[i1]);
}

double Multipliers::min_osc_denom(int& k_at, double& xi_norm_at) const {
    const int n = g_.n;
    double best = -1.0;
    k_at = 0;
    xi_norm_at = 0.0;
    for (int s = 0; s < g_.nt; ++s) {
        if (g_.k_map[s] == 0) continue;
        size_t q = 0;
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3, ++q) {
                    cd d(xi2_[q],
                         g_.kap_map[s] - g_.par.lambda * g_.xi_map[i1]);
                    double a = std::abs(d);
                    if (best < 0.0 || a < best) {
                        best = a;
                        k_at = std::abs(g_.k_map[s]);
                        xi_norm_at = std::sqrt(xi2_[q]);
                    }
                }
    }
    return best;
}

} // namespace tpns
