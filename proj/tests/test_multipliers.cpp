// Unit tests for the Fourier-multiplier operators: projection, steady and
// oscillatory resolvents, pressure multiplier, dealias mask and the
// denominator scans backing the symbol claims.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "errors.hpp"
#include "fft.hpp"
#include "field.hpp"
#include "field_ops.hpp"
#include "grid.hpp"
#include "multipliers.hpp"
#include "params.hpp"
#include "solver.hpp"

using namespace tpns;

namespace {

Params small_params(int n = 8, int ntm = 2, double L = M_PI) {
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

TEST_CASE("projection: single-mode hand value and zero-frequency passthrough") {
    // Unit frequency spacing; mode m = (1, 1, 0) carries xi parallel to
    // (1, 1, 0)/sqrt(2). Projecting v = e1 leaves (1/2, -1/2, 0).
    Params p = small_params();
    Grid g(p);
    Multipliers mult(g);

    Field v(g, 3, Repr::spectral);
    v.at(0, 1, 1, 0, 0) = cd(1.0, 0.0);
    v.at(0, 0, 0, 0, 0) = cd(0.7, 0.0); // xi = 0: untouched
    v.at(0, 0, 0, 0, 2) = cd(-0.2, 0.3);
    mult.helmholtz(v);

    CHECK(std::abs(v.at(0, 1, 1, 0, 0) - cd(0.5, 0.0)) <= 1e-15);
    CHECK(std::abs(v.at(0, 1, 1, 0, 1) - cd(-0.5, 0.0)) <= 1e-15);
    CHECK(std::abs(v.at(0, 1, 1, 0, 2)) <= 1e-15);
    CHECK(std::abs(v.at(0, 0, 0, 0, 0) - cd(0.7, 0.0)) <= 1e-15);
    CHECK(std::abs(v.at(0, 0, 0, 0, 2) - cd(-0.2, 0.3)) <= 1e-15);
}

TEST_CASE("projection: idempotent and divergence-annihilating") {
    Params p = small_params(8, 2);
    Grid g(p);
    Multipliers mult(g);

    Field v(g, 3, Repr::spectral);
    std::mt19937 gen(2026u);
    for (cd& z : v.data) z = cd(rng_unit(gen), rng_unit(gen));

    mult.helmholtz(v);
    CHECK(divergence_max_rel(g, v) <= 1e-13);

    Field w = v;
    mult.helmholtz(w);
    double defect = 0.0;
    for (size_t i = 0; i < v.data.size(); ++i)
        defect = std::max(defect, std::abs(w.data[i] - v.data[i]));
    CHECK(defect <= 1e-13);
}

TEST_CASE("pressure multiplier: hand value at an axis mode") {
    Params p = small_params();
    Grid g(p);
    Multipliers mult(g);

    Field gvec(g, 3, Repr::spectral);
    gvec.at(0, 1, 0, 0, 0) = cd(1.0, 0.0); // a = 1
    gvec.at(0, 1, 0, 0, 1) = cd(2.0, 0.0); // b = 2 (orthogonal to xi)
    const Field ph = mult.pressure(gvec);

    // p = -i xi . g / |xi|^2 = -i at xi = (1, 0, 0).
    CHECK(std::abs(ph.at(0, 1, 0, 0, 0) - cd(0.0, -1.0)) <= 1e-15);
    CHECK(std::abs(ph.at(0, 0, 0, 0, 0)) == 0.0); // xi = 0 zeroed
}

TEST_CASE("steady resolvent: hand value, mean-free, k-plane separation") {
    Params p = small_params();
    Grid g(p);
    Multipliers mult(g);

    Field gvec(g, 3, Repr::spectral);
    gvec.at(0, 1, 0, 0, 1) = cd(1.0, 0.0);    // xi = (1,0,0), g = e2
    gvec.at(0, 0, 0, 0, 0) = cd(5.0, 0.0);    // mean forcing: dropped
    gvec.at(1, 1, 0, 0, 1) = cd(3.0, 0.0);    // k = 1 content: not steady
    const Field u = mult.steady_inverse(gvec);

    // Denominator |xi|^2 - i lambda xi_1 = 1 - i at unit drift.
    const cd want = cd(1.0, 0.0) / cd(1.0, -1.0);
    CHECK(std::abs(u.at(0, 1, 0, 0, 1) - want) <= 1e-15);
    CHECK(std::abs(u.at(0, 0, 0, 0, 0)) == 0.0);
    CHECK(std::abs(u.at(1, 1, 0, 0, 1)) == 0.0);
}

TEST_CASE("oscillatory resolvent: hand value and steady-plane separation") {
    Params p = small_params();
    Grid g(p);
    Multipliers mult(g);

    Field gvec(g, 3, Repr::spectral);
    gvec.at(1, 1, 0, 0, 0) = cd(1.0, 0.0); // k = 1, xi = (1, 0, 0)
    gvec.at(0, 1, 0, 0, 0) = cd(2.0, 0.0); // steady content: not oscillatory
    const Field u = mult.oscillatory_inverse(gvec);

    // Denominator |xi|^2 + i (kappa - lambda xi_1) = 1 + i(1 - 1) = 1.
    CHECK(std::abs(u.at(1, 1, 0, 0, 0) - cd(1.0, 0.0)) <= 1e-15);
    CHECK(std::abs(u.at(0, 1, 0, 0, 0)) == 0.0);

    // No projection inside the oscillatory resolvent: a compressible input
    // stays compressible.
    CHECK(divergence_max_rel(g, u) > 0.0);
}

TEST_CASE("oscillatory denominator: base-mode value and positive lattice min") {
    Params p; // production defaults
    p.n_spatial = 16;
    p.n_temporal = 4;
    Grid g(p);
    Multipliers mult(g);

    // k = 1 (storage s = 1), xi = 0: |D| = kappa_1 = 2 pi / T exactly.
    const cd d0 = mult.osc_denom(1, 0, 0, 0);
    CHECK(std::abs(d0) == g.dkap);
    CHECK(d0.real() == 0.0);

    int k_at = 0;
    double xi_at = -1.0;
    const double mn = mult.min_osc_denom(k_at, xi_at);
    CHECK(mn > 0.0);
    CHECK(k_at != 0);
    CHECK(xi_at >= 0.0);
    CHECK(mn <= std::abs(d0)); // the scan includes the base mode
}

TEST_CASE("dealias mask zeroes exactly the out-of-band modes") {
    Params p = small_params(8, 2); // band_m = 2, band_k = 1
    Grid g(p);
    Multipliers mult(g);
    CHECK(g.band_m == 2);
    CHECK(g.band_k == 1);

    Field f(g, 1, Repr::spectral);
    for (cd& z : f.data) z = cd(1.0, 0.0);
    mult.dealias(f);

    for (int s = 0; s < g.nt; ++s)
        for (int i1 = 0; i1 < g.n; ++i1)
            for (int i2 = 0; i2 < g.n; ++i2)
                for (int i3 = 0; i3 < g.n; ++i3) {
                    const bool keep = std::abs(g.k_map[s]) <= g.band_k &&
                                      std::abs(g.m_map[i1]) <= g.band_m &&
                                      std::abs(g.m_map[i2]) <= g.band_m &&
                                      std::abs(g.m_map[i3]) <= g.band_m;
                    CHECK(std::abs(f.at(s, i1, i2, i3, 0)) ==
                          (keep ? 1.0 : 0.0));
                }
}

TEST_CASE("manufactured oscillatory roundtrip on a small lattice") {
    Params p = small_params(16, 2, 16.0);
    Grid g(p);
    Solver solver(g);

    Field w(g, 3, Repr::spectral);
    std::mt19937 gen(77u);
    for (int s = 0; s < g.nt; ++s) {
        if (g.k_map[s] == 0 || std::abs(g.k_map[s]) > g.band_k) continue;
        for (int i1 = 0; i1 < g.n; ++i1)
            for (int i2 = 0; i2 < g.n; ++i2)
                for (int i3 = 0; i3 < g.n; ++i3) {
                    if (std::abs(g.m_map[i1]) > 2 ||
                        std::abs(g.m_map[i2]) > 2 ||
                        std::abs(g.m_map[i3]) > 2)
                        continue;
                    for (int c = 0; c < 3; ++c)
                        w.at(s, i1, i2, i3, c) =
                            cd(rng_unit(gen), rng_unit(gen));
                }
    }
    CHECK(solver.manufactured_roundtrip(w) <= 1e-9);

    // Steady content is rejected.
    Field bad = w;
    bad.at(0, 1, 0, 0, 0) = cd(1.0, 0.0);
    CHECK_THROWS_AS(solver.manufactured_roundtrip(bad), ConfigError);

    // All-zero input is rejected.
    Field zero(g, 3, Repr::spectral);
    CHECK_THROWS_AS(solver.manufactured_roundtrip(zero), ConfigError);
}
