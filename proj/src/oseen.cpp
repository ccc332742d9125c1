// Steady fundamental solution implementation.
#include "oseen.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "errors.hpp"
#include "special.hpp"

namespace tpns {

namespace {

double norm3(const Vec3& x) {
    return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
}

void require_args(const Vec3&, double lambda, double r, const char* who) {
    if (lambda == 0.0)
        throw ConfigError(std::string(who) + ": drift required (lambda != 0)");
    if (!(r > 0.0))
        throw ConfigError(std::string(who) + ": x must be nonzero");
}

} // namespace

double oseen_phi(const Vec3& x, double lambda) {
    double r = norm3(x);
    require_args(x, lambda, r, "oseen_phi");
    double al = std::abs(lambda);
    double x1 = (lambda < 0.0) ? -x[0] : x[0];
    double s = 0.5 * al * (r + x1);
    return oseen_E(s) / (4.0 * M_PI * al);
}

void oseen_gamma_full(const Vec3& x, double lambda, Mat3& gamma, Ten3& grad) {
    double r = norm3(x);
    require_args(x, lambda, r, "oseen_gamma");
    double al = std::abs(lambda);
    Vec3 xm = x;
    if (lambda < 0.0) xm[0] = -xm[0];

    double s = 0.5 * al * (r + xm[0]);
    EDerivs e = oseen_E_derivs(s);

    double r2 = r * r, r3 = r2 * r, r5 = r3 * r2;
    Vec3 si;
    for (int i = 0; i < 3; ++i)
        si[i] = 0.5 * al * (xm[i] / r + (i == 0 ? 1.0 : 0.0));
    Mat3 sij;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            sij[i][j] = 0.5 * al * ((i == j ? 1.0 : 0.0) / r -
                                    xm[i] * xm[j] / r3);
    double pref = 1.0 / (4.0 * M_PI * al);

    double es = std::exp(-s);
    double y = es / (4.0 * M_PI * r);
    Vec3 dy;
    for (int i = 0; i < 3; ++i) dy[i] = y * (-si[i] - xm[i] / r2);

    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
            double d2phi = pref * (e.E2 * si[j] * si[l] + e.E1 * sij[j][l]);
            gamma[j][l] = (j == l ? y : 0.0) - d2phi;
        }

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) {
                double s3 = 0.5 * al *
                            (-((i == j ? xm[l] : 0.0) + (i == l ? xm[j] : 0.0) +
                               (j == l ? xm[i] : 0.0)) /
                                 r3 +
                             3.0 * xm[i] * xm[j] * xm[l] / r5);
                double d3phi =
                    pref * (e.E3 * si[i] * si[j] * si[l] +
                            e.E2 * (sij[i][j] * si[l] + sij[i][l] * si[j] +
                                    sij[j][l] * si[i]) +
                            e.E1 * s3);
                grad[i][j][l] = (j == l ? dy[i] : 0.0) - d3phi;
            }

    if (lambda < 0.0) {
        // Gamma_jl(x) = M_j M_l Gamma^{|lambda|}_jl(Mx), M = diag(-1,1,1).
        auto msign = [](int a) { return a == 0 ? -1.0 : 1.0; };
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) gamma[j][l] *= msign(j) * msign(l);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l)
                    grad[i][j][l] *= msign(i) * msign(j) * msign(l);
    }
}

Mat3 oseen_gamma(const Vec3& x, double lambda) {
    Mat3 g;
    Ten3 dg;
    oseen_gamma_full(x, lambda, g, dg);
    return g;
}

double oseen_gamma_norm(const Vec3& x, double lambda) {
    Mat3 g = oseen_gamma(x, lambda);
    double acc = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) acc += g[j][l] * g[j][l];
    return std::sqrt(acc);
}

double oseen_gamma_grad_norm(const Vec3& x, double lambda) {
    Mat3 g;
    Ten3 dg;
    oseen_gamma_full(x, lambda, g, dg);
    double acc = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) acc += dg[i][j][l] * dg[i][j][l];
    return std::sqrt(acc);
}

Vec3 oseen_downstream(double lambda) {
    if (lambda == 0.0)
        throw ConfigError("oseen_downstream: drift required (lambda != 0)");
    return {lambda > 0.0 ? -1.0 : 1.0, 0.0, 0.0};
}

double oseen_sphere_gradnorm_integral(double r, double lambda, int n_gl,
                                      bool refine) {
    if (!(r > 0.0))
        throw ConfigError("oseen_sphere_gradnorm_integral: r must be positive");
    double al = std::abs(lambda);
    // Panel breakpoints in the polar angle psi from the downstream axis,
    // geometrically refined toward the wake (psi = 0).
    double w = std::min(1.0, 1.0 / std::sqrt(al * r + 1e-30)) / 4.0;
    std::vector<double> bps;
    bps.push_back(0.0);
    for (double b = w; b < M_PI / 2.0; b *= 2.0) bps.push_back(b);
    bps.push_back(M_PI / 2.0);
    bps.push_back(3.0 * M_PI / 4.0);
    bps.push_back(M_PI);
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    int order = refine ? 2 * n_gl : n_gl;
    std::vector<double> nodes, wts;
    gl_nodes(order, -1.0, 1.0, nodes, wts);

    double down1 = oseen_downstream(lambda)[0];
    double total = 0.0;
    for (size_t p = 0; p + 1 < bps.size(); ++p) {
        double mid = 0.5 * (bps[p] + bps[p + 1]);
        double half = 0.5 * (bps[p + 1] - bps[p]);
        for (int q = 0; q < order; ++q) {
            double psi = mid + half * nodes[q];
            Vec3 x{down1 * std::cos(psi) * r, std::sin(psi) * r, 0.0};
            double f = oseen_gamma_grad_norm(x, lambda);
            total += wts[q] * half * f * std::sin(psi);
        }
    }
    return 2.0 * M_PI * r * r * total;
}

} // namespace tpns
