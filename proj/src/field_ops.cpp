// Field-level numerics implementation.
#include "field_ops.hpp"

#include <cmath>

#include "errors.hpp"

namespace tpns {

double lp_norm(const Grid& g, const Field& f, double p, const Region& region,
               double exclude_radius) {
    f.require(g, Repr::physical, "lp_norm");
    if (!(p >= 1.0)) throw ConfigError("lp_norm: exponent must be >= 1");
    const int n = g.n;
    double acc = 0.0;
    for (int s = 0; s < g.nt; ++s)
        for (int i1 = 0; i1 < n; ++i1) {
            double x1 = g.x_map[i1];
            for (int i2 = 0; i2 < n; ++i2) {
                double x2 = g.x_map[i2];
                for (int i3 = 0; i3 < n; ++i3) {
                    double x3 = g.x_map[i3];
                    double r = std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
                    if (!region.contains(r) || r < exclude_radius) continue;
                    double mag2 = 0.0;
                    size_t base = f.idx(s, i1, i2, i3, 0);
                    for (int c = 0; c < f.comps; ++c)
                        mag2 += std::norm(f.data[base + c]);
                    acc += std::pow(mag2, 0.5 * p);
                }
            }
        }
    double cell = g.h * g.h * g.h;
    return std::pow(acc * cell / g.nt, 1.0 / p);
}

double divergence_max_rel(const Grid& g, const Field& u) {
    u.require(g, Repr::spectral, "divergence_max_rel");
    if (u.comps != 3)
        throw ConfigError("divergence_max_rel: 3-component field required");
    const int n = g.n;
    double worst = 0.0;
    double umax = 0.0;
    for (int s = 0; s < g.nt; ++s)
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3) {
                    size_t base = u.idx(s, i1, i2, i3, 0);
                    cd uh1 = u.data[base], uh2 = u.data[base + 1],
                       uh3 = u.data[base + 2];
                    cd div = cd(0.0, 1.0) * (g.xi_map[i1] * uh1 +
                                             g.xi_map[i2] * uh2 +
                                             g.xi_map[i3] * uh3);
                    double d = std::abs(div);
                    if (d > worst) worst = d;
                    double m = std::abs(uh1) + std::abs(uh2) + std::abs(uh3);
                    if (m > umax) umax = m;
                }
    return umax > 0.0 ? worst / umax : 0.0;
}

double hermitian_defect(const Grid& g, const Field& f) {
    f.require(g, Repr::spectral, "hermitian_defect");
    const int n = g.n;
    auto negs = [&](int s) { return s == 0 ? 0 : g.nt - s; };
    auto negi = [&](int i) { return i == 0 ? 0 : n - i; };
    double worst = 0.0;
    for (int s = 0; s < g.nt; ++s)
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3) {
                    size_t a = f.idx(s, i1, i2, i3, 0);
                    size_t b = f.idx(negs(s), negi(i1), negi(i2), negi(i3), 0);
                    for (int c = 0; c < f.comps; ++c) {
                        double d =
                            std::abs(f.data[b + c] - std::conj(f.data[a + c]));
                        if (d > worst) worst = d;
                    }
                }
    return worst;
}

double max_abs(const Field& f) {
    double worst = 0.0;
    for (const cd& v : f.data) {
        double a = std::abs(v);
        if (a > worst) worst = a;
    }
    return worst;
}

double max_imag(const Field& f) {
    double worst = 0.0;
    for (const cd& v : f.data) {
        double a = std::abs(v.imag());
        if (a > worst) worst = a;
    }
    return worst;
}

void guard_finite(const Field& f, const char* who) {
    for (const cd& v : f.data)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NumericError(std::string(who) +
                               ": non-finite value encountered");
}

} // namespace tpns
