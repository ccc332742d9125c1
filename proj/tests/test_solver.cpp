// Unit tests for the Picard solver: nonlinearity hand values, agreement of
// the divergence and convective forms, the aliasing-free product oracle at
// doubled resolution, linear first iterate, convergence and diagnostics.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "errors.hpp"
#include "fft.hpp"
#include "field.hpp"
#include "field_ops.hpp"
#include "forcing.hpp"
#include "grid.hpp"
#include "multipliers.hpp"
#include "params.hpp"
#include "solver.hpp"

using namespace tpns;

namespace {

double rng_unit(std::mt19937& gen) {
    return ((double)(gen() >> 5) * (1.0 / 134217728.0)) - 1.0;
}

/// Storage index of a signed integer frequency on an n-point axis.
int sidx(int m, int n) { return m >= 0 ? m : m + n; }

double max_diff(const Field& a, const Field& b) {
    double d = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i)
        d = std::max(d, std::abs(a.data[i] - b.data[i]));
    return d;
}

} // namespace

TEST_CASE("nonlinearity: analytic single-mode advection") {
    // u = (A cos x2, B cos x1, 0) at unit frequency spacing is solenoidal
    // and steady; u . grad u = (-AB cos x1 sin x2, -AB cos x2 sin x1, 0).
    Params p;
    p.n_spatial = 16;
    p.n_temporal = 1;
    p.box_half_length = M_PI;
    Grid g(p);
    Solver solver(g);

    const double A = 0.8, B = 1.3;
    Field u(g, 3, Repr::spectral);
    u.at(0, 0, sidx(1, g.n), 0, 0) = cd(0.5 * A, 0.0);
    u.at(0, 0, sidx(-1, g.n), 0, 0) = cd(0.5 * A, 0.0);
    u.at(0, sidx(1, g.n), 0, 0, 1) = cd(0.5 * B, 0.0);
    u.at(0, sidx(-1, g.n), 0, 0, 1) = cd(0.5 * B, 0.0);

    const Field nl = solver.nonlinear_divergence(u);

    // cos x1 sin x2 has coefficient -i/4 at (m1, m2) = (1, 1) and +i/4 at
    // (1, -1); N1 = -AB cos x1 sin x2.
    const cd c11 = nl.at(0, sidx(1, g.n), sidx(1, g.n), 0, 0);
    const cd c1m1 = nl.at(0, sidx(1, g.n), sidx(-1, g.n), 0, 0);
    CHECK(std::abs(c11 - cd(0.0, 0.25 * A * B)) <= 1e-12);
    CHECK(std::abs(c1m1 - cd(0.0, -0.25 * A * B)) <= 1e-12);

    // Component 2 mirrors component 1 under swapping the axes.
    const cd d11 = nl.at(0, sidx(1, g.n), sidx(1, g.n), 0, 1);
    CHECK(std::abs(d11 - cd(0.0, 0.25 * A * B)) <= 1e-12);

    // Everything vanishes on the third component and at untouched modes.
    CHECK(std::abs(nl.at(0, sidx(1, g.n), sidx(1, g.n), 0, 2)) <= 1e-14);
    CHECK(std::abs(nl.at(0, sidx(2, g.n), 0, 0, 0)) <= 1e-14);

    // The convective form agrees (the field is solenoidal).
    const Field nc = solver.nonlinear_convective(u);
    CHECK(max_diff(nl, nc) <= 1e-13);
}

TEST_CASE("nonlinearity: dealiased product matches the doubled lattice") {
    Params pc;
    pc.n_spatial = 16;
    pc.n_temporal = 2;
    Grid gc(pc);
    Params pf = pc;
    pf.n_spatial = 32;
    Grid gf(pf);
    Solver sc(gc), sf(gf);
    Fft fft_c(gc);

    // Random real physical field, band-limited on the coarse lattice.
    Field u(gc, 3, Repr::physical);
    std::mt19937 gen(424242u);
    for (cd& z : u.data) z = cd(rng_unit(gen), 0.0);
    fft_c.forward(u);
    sc.multipliers().dealias(u);

    // Embed the identical coefficients into the doubled lattice.
    Field uf(gf, 3, Repr::spectral);
    for (int s = 0; s < gc.nt; ++s)
        for (int i1 = 0; i1 < gc.n; ++i1)
            for (int i2 = 0; i2 < gc.n; ++i2)
                for (int i3 = 0; i3 < gc.n; ++i3)
                    for (int c = 0; c < 3; ++c) {
                        const cd v = u.at(s, i1, i2, i3, c);
                        if (std::abs(v) == 0.0) continue;
                        uf.at(s, sidx(gc.m_map[i1], gf.n),
                              sidx(gc.m_map[i2], gf.n),
                              sidx(gc.m_map[i3], gf.n), c) = v;
                    }

    const Field nc = sc.nonlinear_divergence(u);
    const Field nf = sf.nonlinear_divergence(uf);

    // Coarse in-band coefficients are alias-free under the 2/3 rule, so the
    // doubled lattice reproduces them.
    double worst = 0.0;
    double scale = 0.0;
    for (int s = 0; s < gc.nt; ++s)
        for (int i1 = 0; i1 < gc.n; ++i1)
            for (int i2 = 0; i2 < gc.n; ++i2)
                for (int i3 = 0; i3 < gc.n; ++i3) {
                    if (!gc.in_band(s, i1, i2, i3)) continue;
                    for (int c = 0; c < 3; ++c) {
                        const cd a = nc.at(s, i1, i2, i3, c);
                        const cd b = nf.at(s, sidx(gc.m_map[i1], gf.n),
                                           sidx(gc.m_map[i2], gf.n),
                                           sidx(gc.m_map[i3], gf.n), c);
                        worst = std::max(worst, std::abs(a - b));
                        scale = std::max(scale, std::abs(b));
                    }
                }
    CHECK(scale > 0.0);
    CHECK(worst / scale <= 1e-10);
}

TEST_CASE("solve: first iterate equals the linear solution operator") {
    Params p;
    p.n_spatial = 32;
    p.n_temporal = 2;
    Grid g(p);
    Solver solver(g);
    Fft fft(g);
    Multipliers mult(g);

    ForcingSpec fs;
    fs.amplitude = Vec3{0.04, 0.02, 0.0};
    const Field f_phys = sample_forcing(g, fs);
    const SolveResult sol = solver.solve(f_phys);

    Field fh = f_phys;
    fft.forward(fh);
    mult.dealias(fh);
    mult.helmholtz(fh);
    Field lin = mult.steady_inverse(fh);
    const Field osc = mult.oscillatory_inverse(fh);
    for (size_t i = 0; i < lin.data.size(); ++i) lin.data[i] += osc.data[i];
    mult.dealias(lin);

    double scale = max_abs(lin);
    CHECK(scale > 0.0);
    CHECK(max_diff(sol.first_iterate, lin) / scale <= 1e-12);
}

TEST_CASE("solve: convergence, divergence-free, residual gate, diagnostics") {
    Params p;
    p.n_spatial = 32;
    p.n_temporal = 2;
    Grid g(p);
    Solver solver(g);

    ForcingSpec fs;
    fs.amplitude = Vec3{0.04, 0.02, 0.0};
    const Field f_phys = sample_forcing(g, fs);
    const SolveResult sol = solver.solve(f_phys);

    CHECK(sol.converged);
    CHECK(sol.iterations <= p.max_iter);
    CHECK(sol.f_max > 0.0);
    CHECK(sol.final_residual <= p.tol_solver * sol.f_max);
    CHECK(sol.divergence_rel <= p.tol_div);
    CHECK(sol.amplitude > 0.0);
    CHECK(sol.residual_history.size() == (size_t)sol.iterations);

    // The solution is genuinely nonlinear: it differs from the first
    // iterate, and the residual of the first iterate alone is larger.
    CHECK(max_diff(sol.u_hat, sol.first_iterate) > 0.0);
}

TEST_CASE("solve: quadratic smallness of the nonlinear correction") {
    Params p;
    p.n_spatial = 32;
    p.n_temporal = 2;
    Grid g(p);
    Solver solver(g);

    ForcingSpec fs1;
    fs1.amplitude = Vec3{0.04, 0.02, 0.0};
    ForcingSpec fs2 = fs1;
    fs2.amplitude = Vec3{0.02, 0.01, 0.0};

    const SolveResult s1 = solver.solve(sample_forcing(g, fs1));
    const SolveResult s2 = solver.solve(sample_forcing(g, fs2));

    Field c1 = s1.u_hat;
    for (size_t i = 0; i < c1.data.size(); ++i)
        c1.data[i] -= s1.first_iterate.data[i];
    Field c2 = s2.u_hat;
    for (size_t i = 0; i < c2.data.size(); ++i)
        c2.data[i] -= s2.first_iterate.data[i];

    // Halving the forcing should quarter the correction (factor-2 slack).
    const double ratio = max_abs(c1) / max_abs(c2);
    CHECK(ratio >= 2.0);
    CHECK(ratio <= 8.0);
}

TEST_CASE("solve: NaN input aborts with a numeric error") {
    Params p;
    p.n_spatial = 16;
    p.n_temporal = 1;
    Grid g(p);
    Solver solver(g);

    Field f(g, 3, Repr::physical);
    f.data[7] = cd(std::nan(""), 0.0);
    CHECK_THROWS_AS(solver.solve(f), NumericError);
}
