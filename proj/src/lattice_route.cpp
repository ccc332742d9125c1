// Spectral route implementation.
#include "lattice_route.hpp"

#include <cmath>

#include "errors.hpp"
#include "fft.hpp"
#include "special.hpp"

namespace tpns {

namespace {

struct YukawaTerms {
    cd y;       ///< e^{-mu r}/(4 pi r)
    cd w0, w1, w2; ///< w and radial derivatives w', w''
    cd h0, h1, h2; ///< h and radial derivatives h', h''
};

// Closed-form radial profiles of the subtracted symbol terms at radius r,
// mu = sqrt(i kappa) with nonnegative real part.
YukawaTerms yukawa_terms(cd mu, double r) {
    YukawaTerms t{};
    cd z = mu * r;
    cd ez = std::exp(-z);
    double fourpi = 4.0 * M_PI;
    cd mu2 = mu * mu, mu4 = mu2 * mu2;
    t.y = ez / (fourpi * r);
    t.w0 = (1.0 - ez) / (fourpi * mu2 * r);
    t.w1 = (ez * (1.0 + z) - 1.0) / (fourpi * mu2 * r * r);
    t.w2 = (2.0 - ez * (z * z + 2.0 * z + 2.0)) / (fourpi * mu2 * r * r * r);
    cd e2 = (1.0 + z + 0.5 * z * z) * ez;
    t.h0 = (1.0 - e2) / (fourpi * mu4 * r * r * r);
    t.h1 = (0.5 * z * z * z * ez - 3.0 * (1.0 - e2)) /
           (fourpi * mu4 * r * r * r * r);
    t.h2 = (-0.5 * z * z * z * z * ez - 2.0 * z * z * z * ez +
            12.0 * (1.0 - e2)) /
           (fourpi * mu4 * r * r * r * r * r);
    return t;
}

// S1 + S2 in real space at x: the inverse transforms of
// S1 = P_H/(|xi|^2 + i kappa) and S2 = i lambda xi_1 P_H/(|xi|^2 + i kappa)^2.
CMat3 subtracted_terms(const Vec3& x, double lambda, cd mu) {
    double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    YukawaTerms t = yukawa_terms(mu, r);
    Vec3 xh{x[0] / r, x[1] / r, x[2] / r};
    CMat3 out;
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
            double djl = (j == l) ? 1.0 : 0.0;
            double Ajl = djl - xh[j] * xh[l];
            // Hess of the radial profiles
            cd hess_w = t.w2 * xh[j] * xh[l] + t.w1 / r * Ajl;
            cd hess_h = t.h2 * xh[j] * xh[l] + t.h1 / r * Ajl;
            // grad of h: d_l h = h' xh_l
            cd s1 = djl * t.y + hess_w;
            cd hess_x1h = (j == 0 ? t.h1 * xh[l] : cd(0.0)) +
                          (l == 0 ? t.h1 * xh[j] : cd(0.0)) + x[0] * hess_h;
            cd s2 = -0.5 * lambda * x[0] * t.y * djl - lambda * hess_x1h;
            out[j][l] = s1 + s2;
        }
    return out;
}

} // namespace

std::vector<CMat3> mode_velocity_kernel_spectral(
    int k, const std::vector<Vec3>& points, double lambda, double period,
    int n, double box_half) {
    if (k == 0)
        throw ConfigError("mode_velocity_kernel_spectral: k must be nonzero");
    if (lambda == 0.0)
        throw ConfigError("mode_velocity_kernel_spectral: drift required");
    if (k < 0) {
        std::vector<CMat3> g = mode_velocity_kernel_spectral(
            -k, points, lambda, period, n, box_half);
        for (auto& m : g)
            for (auto& row : m)
                for (auto& v : row) v = std::conj(v);
        return g;
    }
    if (lambda < 0.0) {
        std::vector<Vec3> pm(points);
        for (auto& p : pm) p[0] = -p[0];
        std::vector<CMat3> g =
            mode_velocity_kernel_spectral(k, pm, -lambda, period, n, box_half);
        auto ms = [](int a) { return a == 0 ? -1.0 : 1.0; };
        for (auto& m : g)
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l) m[j][l] *= ms(j) * ms(l);
        return g;
    }

    const double hb = 2.0 * box_half / n;
    // Snap points to lattice indices.
    std::vector<std::array<int, 3>> pidx(points.size());
    for (size_t p = 0; p < points.size(); ++p) {
        for (int a = 0; a < 3; ++a) {
            double fi = (points[p][a] + box_half) / hb;
            int i = (int)std::lround(fi);
            if (std::abs(fi - i) > 1e-9)
                throw ConfigError(
                    "mode_velocity_kernel_spectral: point off the lattice");
            if (i < 0 || i >= n)
                throw ConfigError(
                    "mode_velocity_kernel_spectral: point outside the box");
            pidx[p][a] = i;
        }
    }

    double kap = 2.0 * M_PI * k / period;
    cd mu = sqrt_nnr(cd(0.0, kap));
    double dxi = M_PI / box_half;
    std::vector<double> xi(n), ph(n);
    for (int i = 0; i < n; ++i) {
        int m = (i <= n / 2 - 1) ? i : i - n;
        if (i == n / 2) m = -n / 2;
        xi[i] = dxi * m;
        ph[i] = (std::abs(m) % 2 == 0) ? 1.0 : -1.0;
    }
    const double cell = 1.0 / std::pow(2.0 * box_half, 3);

    std::vector<CMat3> out(points.size());
    std::vector<cd> buf((size_t)n * n * n);

    for (int j = 0; j < 3; ++j)
        for (int l = j; l < 3; ++l) {
            // Remainder symbol: P_{jl} * (-lambda^2 xi_1^2) / (A^2 D).
            size_t q = 0;
            for (int i1 = 0; i1 < n; ++i1)
                for (int i2 = 0; i2 < n; ++i2)
                    for (int i3 = 0; i3 < n; ++i3, ++q) {
                        double x1 = xi[i1], x2 = xi[i2], x3 = xi[i3];
                        double q2 = x1 * x1 + x2 * x2 + x3 * x3;
                        if (q2 == 0.0) {
                            buf[q] = cd(0.0, 0.0);
                            continue;
                        }
                        double xj = (j == 0) ? x1 : (j == 1) ? x2 : x3;
                        double xl = (l == 0) ? x1 : (l == 1) ? x2 : x3;
                        double pjl =
                            ((j == l) ? 1.0 : 0.0) - xj * xl / q2;
                        cd A(q2, kap);
                        cd D(q2, kap - lambda * x1);
                        cd sym = pjl * (-lambda * lambda * x1 * x1) /
                                 (A * A * D);
                        buf[q] = sym *
                                 (cell * ph[i1] * ph[i2] * ph[i3]);
                    }
            fft3d_backward_inplace(buf, n);
            for (size_t p = 0; p < points.size(); ++p) {
                size_t d = (((size_t)pidx[p][0] * n) + pidx[p][1]) * n +
                           pidx[p][2];
                out[p][j][l] = buf[d];
                out[p][l][j] = buf[d];
            }
        }

    for (size_t p = 0; p < points.size(); ++p) {
        CMat3 s = subtracted_terms(points[p], lambda, mu);
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) out[p][j][l] += s[j][l];
    }
    return out;
}

} // namespace tpns
