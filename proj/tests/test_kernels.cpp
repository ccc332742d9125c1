// Unit tests for the fundamental kernels: the steady drift tensor (scalar
// potential, tensor, gradient, wake geometry, sphere integrals), the
// per-mode scalar and velocity kernels with their symmetries, and the
// time-slice L2 aggregate.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "errors.hpp"
#include "lattice_route.hpp"
#include "mode_table.hpp"
#include "oseen.hpp"
#include "special.hpp"
#include "tp_kernel.hpp"

using namespace tpns;

namespace {

constexpr double kT = 2.0 * M_PI;

double cnorm3(const std::array<cd, 3>& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

double cmat_diff(const CMat3& a, const CMat3& b) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) s += std::norm(a[j][l] - b[j][l]);
    return std::sqrt(s);
}

double cmat_norm(const CMat3& a) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) s += std::norm(a[j][l]);
    return std::sqrt(s);
}

} // namespace

TEST_CASE("mode frequency root: definition and positivity") {
    const cd s1 = mode_sigma(1, 1.0, kT);
    const cd rhs = cd(0.25, 1.0); // lambda^2/4 + i kappa_1 at unit spacing
    CHECK(std::abs(s1 * s1 - rhs) <= 1e-14);
    CHECK(s1.real() > 0.5); // strictly above |lambda|/2 for k != 0
    CHECK(s1.real() - 0.5 == doctest::Approx(0.30024).epsilon(1e-4));

    const cd sm = mode_sigma(-1, 1.0, kT);
    CHECK(std::abs(sm - std::conj(s1)) <= 1e-14);
}

TEST_CASE("scalar mode kernel: magnitude law, symmetries, contracts") {
    const Vec3 x{1.2, -0.7, 0.4};
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    const double lam = 1.0;

    const cd v = mode_scalar_kernel(2, x, lam, kT);
    const cd sig = mode_sigma(2, lam, kT);
    const double want_mag =
        std::exp(-sig.real() * r - 0.5 * lam * x[0]) / (4.0 * M_PI * r);
    CHECK(std::abs(v) == doctest::Approx(want_mag).epsilon(1e-13));

    // Conjugation in k.
    const cd vm = mode_scalar_kernel(-2, x, lam, kT);
    CHECK(std::abs(vm - std::conj(v)) <= 1e-15);

    // Drift sign mirror in x1.
    const Vec3 xm{-x[0], x[1], x[2]};
    const cd vmir = mode_scalar_kernel(2, xm, -lam, kT);
    CHECK(std::abs(vmir - v) <= 1e-15);

    // Zero drift is allowed for k != 0; the steady limit is excluded.
    CHECK_NOTHROW(mode_scalar_kernel(1, x, 0.0, kT));
    CHECK_THROWS_AS(mode_scalar_kernel(0, x, 0.0, kT), ConfigError);
    CHECK_THROWS_AS(mode_scalar_kernel(0, x, 1.0, kT), ConfigError);
}

TEST_CASE("scalar mode kernel derivatives match finite differences") {
    const Vec3 x{0.9, 0.6, -1.1};
    const double lam = 1.0, dh = 1e-5;

    const std::array<cd, 3> grad = mode_scalar_kernel_grad(1, x, lam, kT);
    for (int i = 0; i < 3; ++i) {
        Vec3 xp = x, xq = x;
        xp[i] += dh;
        xq[i] -= dh;
        const cd fd = (mode_scalar_kernel(1, xp, lam, kT) -
                       mode_scalar_kernel(1, xq, lam, kT)) /
                      (2.0 * dh);
        CHECK(std::abs(grad[i] - fd) <= 1e-8);
    }

    const CMat3 hess = mode_scalar_kernel_hess(1, x, lam, kT);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Vec3 xp = x, xq = x;
            xp[j] += dh;
            xq[j] -= dh;
            const cd fd = (mode_scalar_kernel_grad(1, xp, lam, kT)[i] -
                           mode_scalar_kernel_grad(1, xq, lam, kT)[i]) /
                          (2.0 * dh);
            CHECK(std::abs(hess[i][j] - fd) <= 1e-7);
        }
    // Symmetry of second derivatives.
    CHECK(std::abs(hess[0][1] - hess[1][0]) <= 1e-14);
    CHECK(std::abs(hess[0][2] - hess[2][0]) <= 1e-14);
}

TEST_CASE("steady drift potential and tensor") {
    // Potential on the downstream axis equals E(|lambda| r) / (4 pi) with
    // zero wake coordinate... on the upstream axis s = |lambda| r.
    CHECK(oseen_phi(Vec3{1.0, 0.0, 0.0}, 1.0) ==
          doctest::Approx(oseen_E(1.0) / (4.0 * M_PI)).epsilon(1e-12));
    CHECK(oseen_phi(Vec3{1.0, 0.0, 0.0}, 1.0) ==
          doctest::Approx(0.063391).epsilon(1e-4));

    // Mirror symmetry in the drift sign: entries coupling x1 to a transverse
    // direction flip sign under the reflection.
    const Vec3 x{0.8, -0.5, 1.3};
    const Mat3 a = oseen_gamma(x, 1.0);
    const Mat3 b = oseen_gamma(Vec3{-x[0], x[1], x[2]}, -1.0);
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
            const double sgn = ((j == 0) != (l == 0)) ? -1.0 : 1.0;
            CHECK(a[j][l] == doctest::Approx(sgn * b[j][l]).epsilon(1e-12));
        }

    // The tensor is symmetric.
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l)
            CHECK(a[j][l] == doctest::Approx(a[l][j]).epsilon(1e-12));

    // Gradient against finite differences of the tensor.
    Mat3 g0;
    Ten3 dg;
    oseen_gamma_full(x, 1.0, g0, dg);
    const double dh = 1e-5;
    for (int i = 0; i < 3; ++i) {
        Vec3 xp = x, xq = x;
        xp[i] += dh;
        xq[i] -= dh;
        const Mat3 gp = oseen_gamma(xp, 1.0);
        const Mat3 gq = oseen_gamma(xq, 1.0);
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) {
                const double fd = (gp[j][l] - gq[j][l]) / (2.0 * dh);
                CHECK(std::abs(dg[i][j][l] - fd) <= 1e-7);
            }
    }

    // Downstream direction flips with the drift sign.
    CHECK(oseen_downstream(1.0)[0] == doctest::Approx(-1.0));
    CHECK(oseen_downstream(-2.5)[0] == doctest::Approx(1.0));
}

TEST_CASE("steady sphere integral: positive and quadrature-converged") {
    const double lam = 1.0;
    for (double r : {2.0, 8.0}) {
        const double a = oseen_sphere_gradnorm_integral(r, lam, 24);
        const double b = oseen_sphere_gradnorm_integral(r, lam, 48);
        CHECK(a > 0.0);
        CHECK(std::abs(a - b) / b <= 1e-6);
    }
}

TEST_CASE("velocity mode kernel: symmetries and cache reuse") {
    ModeCache cache(1.0, kT);
    const Vec3 x{1.5, 0.8, -0.6};

    const CMat3 g1 = mode_velocity_kernel(cache, 1, x, 1.0, kT);
    const CMat3 g1b = mode_velocity_kernel(cache, 1, x, 1.0, kT);
    CHECK(cmat_diff(g1, g1b) == 0.0); // cached table, identical evaluation

    // Conjugation in k.
    const CMat3 gm = mode_velocity_kernel(cache, -1, x, 1.0, kT);
    double conj_err = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l)
            conj_err =
                std::max(conj_err, std::abs(gm[j][l] - std::conj(g1[j][l])));
    CHECK(conj_err <= 1e-15);

    // Drift mirror: lambda < 0 evaluated via x1 reflection. Off-diagonal
    // entries coupling x1 to transverse directions flip sign.
    ModeCache cneg(-1.0, kT);
    const CMat3 gn =
        mode_velocity_kernel(cneg, 1, Vec3{-x[0], x[1], x[2]}, -1.0, kT);
    double mir_err = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
            const double sgn = ((j == 0) != (l == 0)) ? -1.0 : 1.0;
            mir_err = std::max(mir_err,
                               std::abs(gn[j][l] - sgn * g1[j][l]));
        }
    CHECK(mir_err <= 1e-12);

    // The tensor is symmetric (delta term plus a Hessian).
    double sym_err = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l)
            sym_err = std::max(sym_err, std::abs(g1[j][l] - g1[l][j]));
    CHECK(sym_err <= 1e-10);

    CHECK_THROWS_AS(mode_velocity_kernel(cache, 0, x, 1.0, kT), ConfigError);

    CHECK(mode_kernel_norm(cache, 1, x, 1.0, kT) ==
          doctest::Approx(cmat_norm(g1)).epsilon(1e-12));
}

TEST_CASE("velocity mode kernel gradient matches finite differences") {
    ModeCache cache(1.0, kT);
    const Vec3 x{2.0, 1.0, 0.5};
    const CTen3 dg = mode_velocity_kernel_grad(cache, 1, x, 1.0, kT);
    const double dh = 1e-5;
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        Vec3 xp = x, xq = x;
        xp[i] += dh;
        xq[i] -= dh;
        const CMat3 gp = mode_velocity_kernel(cache, 1, xp, 1.0, kT);
        const CMat3 gq = mode_velocity_kernel(cache, 1, xq, 1.0, kT);
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) {
                const cd fd = (gp[j][l] - gq[j][l]) / (2.0 * dh);
                worst = std::max(worst, std::abs(dg[i][j][l] - fd));
            }
    }
    CHECK(worst <= 1e-7);
}

TEST_CASE("dual-route agreement at a single interior point") {
    ModeCache cache(1.0, kT);
    const Vec3 x{3.0, 0.0, 0.0};
    const CMat3 conv = mode_velocity_kernel(cache, 1, x, 1.0, kT);
    const CMat3 spec =
        mode_velocity_kernel_spectral(1, {x}, 1.0, kT).front();
    CHECK(cmat_diff(conv, spec) / cmat_norm(conv) <= 1e-3);
}

TEST_CASE("time-slice L2 aggregate: mode sum vs quadrature, reality") {
    ModeCache cache(1.0, kT);
    const Vec3 x{2.5, 1.5, 0.0};
    const int kmax = 4;

    const double a = tp_kernel_l2t(cache, x, kmax, 0, 1.0, kT);
    const double b = tp_kernel_l2t_quadrature(cache, x, kmax, 1.0, kT);
    CHECK(a > 0.0);
    CHECK(std::abs(a - b) / a <= 1e-10);

    // Time slices of the periodic part are real.
    CHECK(tp_kernel_imag_defect(cache, x, kmax, 1.0, kT) <= 1e-12);

    // The gradient aggregate is positive and decays with radius.
    const double g2 = tp_kernel_l2t(cache, Vec3{0.0, 2.0, 0.0}, kmax, 1, 1.0,
                                    kT);
    const double g8 = tp_kernel_l2t(cache, Vec3{0.0, 8.0, 0.0}, kmax, 1, 1.0,
                                    kT);
    CHECK(g2 > 0.0);
    CHECK(g8 < g2);
}
