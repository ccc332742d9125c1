// Unit tests for the foundation layer: parameters, lattice bookkeeping,
// space-time transforms, field norms, scalar special functions, power-law
// fits, tricubic interpolation, forcing synthesis and artifact formatting.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include "errors.hpp"
#include "fft.hpp"
#include "field.hpp"
#include "field_ops.hpp"
#include "fits.hpp"
#include "forcing.hpp"
#include "grid.hpp"
#include "interp.hpp"
#include "io.hpp"
#include "params.hpp"
#include "special.hpp"

using namespace tpns;

namespace {

Params small_params(int n = 8, int ntm = 1, double L = 16.0) {
    Params p;
    p.n_spatial = n;
    p.n_temporal = ntm;
    p.box_half_length = L;
    return p;
}

double rng_unit(std::mt19937& gen) {
    return ((double)(gen() >> 5) * (1.0 / 134217728.0)) - 1.0;
}

} // namespace

TEST_CASE("parameter validation rejects out-of-contract values") {
    Params p;
    CHECK_NOTHROW(p.validate());

    Params bad = p;
    bad.lambda = 0.0;
    CHECK_THROWS_WITH_AS(bad.validate(),
                         "params.lambda: drift required (lambda must be "
                         "nonzero)",
                         ConfigError);

    bad = p;
    bad.period = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = p;
    bad.n_spatial = 7;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = p;
    bad.n_spatial = 2;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = p;
    bad.n_temporal = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = p;
    bad.max_iter = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);

    CHECK(p.time_samples() == 17);
}

TEST_CASE("lattice maps: frequencies, coordinates, parity phases") {
    Params p = small_params(4, 1, M_PI);
    Grid g(p);

    CHECK(g.n == 4);
    CHECK(g.nt == 3);
    // Half-length pi gives unit spatial frequency spacing.
    CHECK(g.dxi == doctest::Approx(1.0));
    CHECK(g.dkap == doctest::Approx(1.0)); // period 2 pi

    CHECK(g.m_map[0] == 0);
    CHECK(g.m_map[1] == 1);
    CHECK(g.m_map[2] == -2);
    CHECK(g.m_map[3] == -1);
    CHECK(g.k_map[0] == 0);
    CHECK(g.k_map[1] == 1);
    CHECK(g.k_map[2] == -1);

    CHECK(g.x_map[0] == doctest::Approx(-M_PI));
    CHECK(g.x_map[2] == doctest::Approx(0.0));
    CHECK(g.h == doctest::Approx(M_PI / 2.0));

    CHECK(g.phase_map[0] == doctest::Approx(1.0));
    CHECK(g.phase_map[1] == doctest::Approx(-1.0));
    CHECK(g.phase_map[2] == doctest::Approx(1.0));
    CHECK(g.phase_map[3] == doctest::Approx(-1.0));
}

TEST_CASE("transform: constant field concentrates on the zero mode") {
    Params p = small_params(8, 2);
    Grid g(p);
    Fft fft(g);

    Field f(g, 1, Repr::physical);
    for (cd& v : f.data) v = cd(3.25, 0.0);
    fft.forward(f);

    CHECK(f.at(0, 0, 0, 0, 0).real() == doctest::Approx(3.25).epsilon(1e-13));
    double off = 0.0;
    for (int s = 0; s < g.nt; ++s)
        for (int i1 = 0; i1 < g.n; ++i1)
            for (int i2 = 0; i2 < g.n; ++i2)
                for (int i3 = 0; i3 < g.n; ++i3)
                    if (s || i1 || i2 || i3)
                        off = std::max(off, std::abs(f.at(s, i1, i2, i3, 0)));
    CHECK(off <= 1e-13);
}

TEST_CASE("transform: pure temporal cosine splits into the +/-1 modes") {
    Params p = small_params(4, 2);
    Grid g(p);
    Fft fft(g);

    Field f(g, 1, Repr::physical);
    for (int s = 0; s < g.nt; ++s) {
        const double t = s * g.dt;
        const cd v(std::cos(2.0 * M_PI / p.period * t), 0.0);
        for (int i1 = 0; i1 < g.n; ++i1)
            for (int i2 = 0; i2 < g.n; ++i2)
                for (int i3 = 0; i3 < g.n; ++i3) f.at(s, i1, i2, i3, 0) = v;
    }
    fft.forward(f);

    // k = +1 and k = -1 coefficients are 1/2 at xi = 0; everything else is 0.
    CHECK(std::abs(f.at(1, 0, 0, 0, 0) - cd(0.5, 0.0)) <= 1e-13);
    CHECK(std::abs(f.at(g.nt - 1, 0, 0, 0, 0) - cd(0.5, 0.0)) <= 1e-13);
    CHECK(std::abs(f.at(0, 0, 0, 0, 0)) <= 1e-13);
    CHECK(std::abs(f.at(2, 0, 0, 0, 0)) <= 1e-13);
    CHECK(std::abs(f.at(1, 1, 0, 0, 0)) <= 1e-13);
}

TEST_CASE("transform: roundtrip, Parseval, Hermitian defect") {
    Params p = small_params(8, 2);
    Grid g(p);
    Fft fft(g);

    Field f(g, 2, Repr::physical);
    std::mt19937 gen(12345u);
    for (cd& v : f.data) v = cd(rng_unit(gen), 0.0);
    Field orig = f;

    fft.forward(f);
    CHECK(hermitian_defect(g, f) <= 1e-12);

    // Parseval for the average-normalized transform:
    // mean over samples of |f|^2 equals the sum of |coeff|^2.
    double sum_phys = 0.0;
    for (const cd& v : orig.data) sum_phys += std::norm(v);
    sum_phys /= (double)g.points();
    double sum_spec = 0.0;
    for (const cd& v : f.data) sum_spec += std::norm(v);
    CHECK(sum_phys == doctest::Approx(sum_spec).epsilon(1e-10));

    fft.inverse(f);
    double err = 0.0;
    for (size_t i = 0; i < f.data.size(); ++i)
        err = std::max(err, std::abs(f.data[i] - orig.data[i]));
    CHECK(err <= 1e-12);
}

TEST_CASE("transform: single mode with parity phase and offset grid") {
    // One spatial coefficient at m = (1, 0, 0) must reproduce
    // e^{i xi . x} on the offset lattice x = -L + h m.
    Params p = small_params(8, 1, 4.0);
    Grid g(p);
    Fft fft(g);

    Field f(g, 1, Repr::spectral);
    f.at(0, 1, 0, 0, 0) = cd(1.0, 0.0);
    fft.inverse(f);

    double err = 0.0;
    for (int i1 = 0; i1 < g.n; ++i1) {
        const double x = g.x_map[i1];
        const cd want = std::exp(cd(0.0, g.dxi * x));
        err = std::max(err, std::abs(f.at(0, i1, 3, 5, 0) - want));
    }
    CHECK(err <= 1e-12);
}

TEST_CASE("lp_norm of a constant over the full box") {
    Params p = small_params(8, 1);
    Grid g(p);
    Field f(g, 1, Repr::physical);
    for (cd& v : f.data) v = cd(1.0, 0.0);

    const double want = std::pow(2.0 * p.box_half_length, 1.5);
    const double got =
        lp_norm(g, f, 2.0, Region::ball(1e9)); // region covers the box
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("field_ops: divergence of a gradient field is nonzero, of a curl "
          "field is zero") {
    Params p = small_params(8, 1);
    Grid g(p);
    Field u(g, 3, Repr::spectral);
    // Solenoidal single mode: xi = (dxi, 0, 0), u = (0, 1, 0).
    u.at(0, 1, 0, 0, 1) = cd(1.0, 0.0);
    CHECK(divergence_max_rel(g, u) <= 1e-14);
    // Compressible single mode: u = (1, 0, 0) at the same frequency gives
    // |xi . u| / max|u| = dxi exactly.
    Field v(g, 3, Repr::spectral);
    v.at(0, 1, 0, 0, 0) = cd(1.0, 0.0);
    CHECK(divergence_max_rel(g, v) == doctest::Approx(g.dxi).epsilon(1e-12));
}

TEST_CASE("guard_finite raises on NaN") {
    Params p = small_params(4, 1);
    Grid g(p);
    Field f(g, 1, Repr::physical);
    CHECK_NOTHROW(guard_finite(f, "test"));
    f.data[5] = cd(std::nan(""), 0.0);
    CHECK_THROWS_AS(guard_finite(f, "test"), NumericError);
}

TEST_CASE("sqrt_nnr principal branch values") {
    const cd a = sqrt_nnr(cd(-4.0, 0.0));
    CHECK(a.real() == doctest::Approx(0.0));
    CHECK(a.imag() == doctest::Approx(2.0));

    const cd b = sqrt_nnr(cd(3.0, 4.0));
    CHECK(b.real() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(b.imag() == doctest::Approx(1.0).epsilon(1e-14));

    const cd c = sqrt_nnr(cd(1.0, 1.0));
    CHECK(c.real() == doctest::Approx(1.09868411346781).epsilon(1e-12));
    CHECK(c.real() >= 0.0);

    // Nonnegative real part also on the branch cut side.
    const cd d = sqrt_nnr(cd(-1.0, -1e-30));
    CHECK(d.real() >= 0.0);
}

TEST_CASE("entire function E: reference values and consistency") {
    CHECK(oseen_E(0.1) == doctest::Approx(0.0975546).epsilon(1e-5));
    CHECK(oseen_E(1.0) == doctest::Approx(0.7965996).epsilon(1e-6));
    CHECK(oseen_E(0.0) == doctest::Approx(0.0));

    // Derivative consistency by central differences.
    const double s = 0.7, dh = 1e-5;
    const EDerivs d = oseen_E_derivs(s);
    const double fd1 = (oseen_E(s + dh) - oseen_E(s - dh)) / (2.0 * dh);
    CHECK(d.E1 == doctest::Approx(fd1).epsilon(1e-8));
    CHECK(d.E == doctest::Approx(oseen_E(s)).epsilon(1e-13));
}

TEST_CASE("fit_decay recovers an exact power law") {
    const std::vector<double> radii = {2.0, 3.0, 5.0, 8.0, 13.0};
    std::vector<double> vals;
    for (double r : radii) vals.push_back(0.7 * std::pow(r, -2.5));
    const DecayFit fit = fit_decay(radii, vals);
    CHECK(fit.alpha == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(fit.c_fit == doctest::Approx(0.7).epsilon(1e-10));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));

    // Contract violations.
    CHECK_THROWS_AS(fit_decay({1.0, 2.0, 3.0}, {1.0, 1.0, 1.0}), ConfigError);
    CHECK_THROWS_AS(fit_decay({1.0, 2.0, 3.0, 3.5}, {1.0, 1.0, 1.0, 1.0}),
                    ConfigError);
    CHECK_THROWS_AS(fit_decay(radii, {1.0, 1.0, 0.0, 1.0, 1.0}), ConfigError);
}

TEST_CASE("tricubic interpolation: node exactness, smooth accuracy, wrap") {
    const int np = 32;
    const double L = 8.0;
    const double hp = 2.0 * L / np;
    std::vector<double> vals((size_t)np * np * np);
    auto fn = [&](double x, double y, double z) {
        return std::cos(M_PI * x / L) * std::sin(M_PI * y / L) +
               0.3 * std::cos(2.0 * M_PI * z / L);
    };
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j)
            for (int k = 0; k < np; ++k)
                vals[((size_t)i * np + j) * np + k] =
                    fn(-L + hp * i, -L + hp * j, -L + hp * k);
    Interp3 interp(vals, np, L);

    // Exact at the sample nodes.
    double node_err = 0.0;
    for (int i = 0; i < np; i += 5)
        for (int j = 0; j < np; j += 7)
            for (int k = 0; k < np; k += 3) {
                const Vec3 x{-L + hp * i, -L + hp * j, -L + hp * k};
                node_err = std::max(
                    node_err,
                    std::abs(interp.at(x) -
                             vals[((size_t)i * np + j) * np + k]));
            }
    CHECK(node_err <= 1e-13);

    // Accurate off the nodes for a smooth periodic function.
    std::mt19937 gen(99u);
    double err = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const Vec3 x{L * rng_unit(gen), L * rng_unit(gen), L * rng_unit(gen)};
        err = std::max(err, std::abs(interp.at(x) - fn(x[0], x[1], x[2])));
    }
    CHECK(err <= 5e-4);

    // Periodic wrap: values just inside both box faces agree with the
    // function (the stencil crosses the seam).
    CHECK(std::abs(interp.at(Vec3{-L + 0.01, 0.3, 7.9}) -
                   fn(-L + 0.01, 0.3, 7.9)) <= 5e-4);

    CHECK_THROWS_AS(Interp3(std::vector<double>(10), 4, L), ConfigError);
}

TEST_CASE("forcing: bump profile, mode coefficients, support contract") {
    CHECK(bump_value(0.0) == doctest::Approx(1.0));
    CHECK(bump_value(1.0) == 0.0);
    CHECK(bump_value(2.0) == 0.0);
    CHECK(bump_value(0.5) > 0.0);

    ForcingSpec fs;
    fs.amplitude = Vec3{1.0, 0.0, 0.0};

    SUBCASE("mixed profile with unit weights") {
        CHECK(profile_mode_coeff(fs, 0) == doctest::Approx(1.0));
        CHECK(profile_mode_coeff(fs, 1) == doctest::Approx(0.5));
        CHECK(profile_mode_coeff(fs, -1) == doctest::Approx(0.5));
        CHECK(profile_mode_coeff(fs, 2) == doctest::Approx(0.0));
    }
    SUBCASE("constant profile") {
        fs.profile = ForcingSpec::Profile::constant;
        CHECK(profile_mode_coeff(fs, 0) == doctest::Approx(1.0));
        CHECK(profile_mode_coeff(fs, 1) == doctest::Approx(0.0));
    }
    SUBCASE("cosine profile at k0 = 2") {
        fs.profile = ForcingSpec::Profile::cosine;
        fs.k0 = 2;
        CHECK(profile_mode_coeff(fs, 0) == doctest::Approx(0.0));
        CHECK(profile_mode_coeff(fs, 2) == doctest::Approx(0.5));
        CHECK(profile_mode_coeff(fs, -2) == doctest::Approx(0.5));
        CHECK(profile_mode_coeff(fs, 1) == doctest::Approx(0.0));
    }
    SUBCASE("profile value matches its mode expansion") {
        fs.weights = {0.8, 0.6, 0.4};
        const double T = 2.0 * M_PI;
        for (double t : {0.0, 0.9, 2.2}) {
            double recon = profile_mode_coeff(fs, 0);
            for (int k = 1; k <= 2; ++k)
                recon += 2.0 * profile_mode_coeff(fs, k) *
                         std::cos(2.0 * M_PI * k / T * t);
            CHECK(profile_value(fs, t, T) ==
                  doctest::Approx(recon).epsilon(1e-12));
        }
    }
    SUBCASE("support must fit in the half box") {
        Params p = small_params(16, 1, 4.0);
        Grid g(p);
        fs.radius = 3.0; // needs |x| <= 2
        CHECK_THROWS_AS(sample_forcing(g, fs), ConfigError);
    }
    SUBCASE("spectral tail of the bump shrinks under refinement") {
        fs.radius = 2.0;
        double tails[2];
        int idx = 0;
        for (int n : {32, 48}) {
            Params p = small_params(n, 2);
            Grid g(p);
            Fft fft(g);
            Field f = sample_forcing(g, fs);
            fft.forward(f);
            tails[idx++] = spectral_tail_fraction(g, f);
        }
        CHECK(tails[0] > 0.0);
        CHECK(tails[1] < tails[0]);
        CHECK(tails[1] < 0.2);
    }
    SUBCASE("validation") {
        fs.radius = -1.0;
        CHECK_THROWS_AS(fs.validate(), ConfigError);
        fs.radius = 2.0;
        fs.profile = ForcingSpec::Profile::cosine;
        fs.k0 = 0;
        CHECK_THROWS_AS(fs.validate(), ConfigError);
        fs.profile = ForcingSpec::Profile::mixed;
        fs.k0 = 1;
        fs.weights.clear();
        CHECK_THROWS_AS(fs.validate(), ConfigError);
    }
}

TEST_CASE("csv number formatting is locale-free and compact") {
    CHECK(csv_num(1.0) == "1");
    CHECK(csv_num(0.25) == "0.25");
    CHECK(csv_num(-3.5e-7) == "-3.5e-07");
}
