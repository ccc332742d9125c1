// Picard iteration for the small-amplitude time-periodic flow: divergence- and
// convective-form nonlinearities, resolvent application through the multiplier
// layer, and the assembled PDE residual used as the convergence gate.
#include "solver.hpp"

#include <cmath>
#include <complex>

#include "errors.hpp"
#include "field_ops.hpp"

namespace tpns {

namespace {

/// sqrt of the largest pointwise squared velocity magnitude on the grid.
double max_speed(const Field& u_phys) {
    double best = 0.0;
    const size_t pts = u_phys.data.size() / (size_t)u_phys.comps;
    for (size_t p = 0; p < pts; ++p) {
        double s2 = 0.0;
        for (int c = 0; c < u_phys.comps; ++c) {
            const double re = u_phys.data[p * (size_t)u_phys.comps + c].real();
            s2 += re * re;
        }
        if (s2 > best) best = s2;
    }
    return std::sqrt(best);
}

} // namespace

Field Solver::nonlinear_divergence(const Field& u_hat) const {
    u_hat.require(g_, Repr::spectral, "nonlinear_divergence");
    Field um = u_hat;
    mult_.dealias(um);
    Field up = um;
    fft_.inverse(up);

    // Six distinct symmetric products u_i u_j, transformed in one batch.
    Field prod(g_, 6, Repr::physical);
    static const int pi[6] = {0, 0, 0, 1, 1, 2};
    static const int pj[6] = {0, 1, 2, 1, 2, 2};
    const size_t pts = prod.data.size() / 6;
    for (size_t p = 0; p < pts; ++p) {
        double u0 = up.data[p * 3 + 0].real();
        double u1 = up.data[p * 3 + 1].real();
        double u2 = up.data[p * 3 + 2].real();
        const double uu[3] = {u0, u1, u2};
        for (int q = 0; q < 6; ++q)
            prod.data[p * 6 + q] = cd(uu[pi[q]] * uu[pj[q]], 0.0);
    }
    fft_.forward(prod);

    // N_i = sum_j i xi_j (u_i u_j)^ ; symmetric product index lookup.
    static const int sym[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    Field nh(g_, 3, Repr::spectral);
    for (int s = 0; s < g_.nt; ++s)
        for (int i1 = 0; i1 < g_.n; ++i1)
            for (int i2 = 0; i2 < g_.n; ++i2)
                for (int i3 = 0; i3 < g_.n; ++i3) {
                    const double xi[3] = {g_.xi_map[i1], g_.xi_map[i2],
                                          g_.xi_map[i3]};
                    for (int i = 0; i < 3; ++i) {
                        cd acc(0.0, 0.0);
                        for (int j = 0; j < 3; ++j)
                            acc += cd(0.0, xi[j]) *
                                   prod.at(s, i1, i2, i3, sym[i][j]);
                        nh.at(s, i1, i2, i3, i) = acc;
                    }
                }
    mult_.dealias(nh);
    return nh;
}

Field Solver::nonlinear_convective(const Field& u_hat) const {
    u_hat.require(g_, Repr::spectral, "nonlinear_convective");
    Field um = u_hat;
    mult_.dealias(um);
    Field up = um;
    fft_.inverse(up);

    Field conv(g_, 3, Repr::physical);
    for (int i = 0; i < 3; ++i) {
        // All three partials of component i in one batch transform.
        Field gi(g_, 3, Repr::spectral);
        for (int s = 0; s < g_.nt; ++s)
            for (int i1 = 0; i1 < g_.n; ++i1)
                for (int i2 = 0; i2 < g_.n; ++i2)
                    for (int i3 = 0; i3 < g_.n; ++i3) {
                        const cd ui = um.at(s, i1, i2, i3, i);
                        gi.at(s, i1, i2, i3, 0) = cd(0.0, g_.xi_map[i1]) * ui;
                        gi.at(s, i1, i2, i3, 1) = cd(0.0, g_.xi_map[i2]) * ui;
                        gi.at(s, i1, i2, i3, 2) = cd(0.0, g_.xi_map[i3]) * ui;
                    }
        fft_.inverse(gi);
        const size_t pts = conv.data.size() / 3;
        for (size_t p = 0; p < pts; ++p) {
            double acc = 0.0;
            for (int j = 0; j < 3; ++j)
                acc += up.data[p * 3 + j].real() * gi.data[p * 3 + j].real();
            conv.data[p * 3 + i] = cd(acc, 0.0);
        }
    }
    fft_.forward(conv);
    mult_.dealias(conv);
    return conv;
}

double Solver::residual_max(const Field& u_hat, const Field& p_hat,
                            const Field& n_hat, const Field& f_hat) const {
    u_hat.require(g_, Repr::spectral, "residual_max");
    double best = 0.0;
    for (int s = 0; s < g_.nt; ++s) {
        const double kap = g_.kap_map[s];
        for (int i1 = 0; i1 < g_.n; ++i1)
            for (int i2 = 0; i2 < g_.n; ++i2)
                for (int i3 = 0; i3 < g_.n; ++i3) {
                    if (!g_.in_band(s, i1, i2, i3)) continue;
                    const double x1 = g_.xi_map[i1];
                    const double x2 = g_.xi_map[i2];
                    const double x3 = g_.xi_map[i3];
                    if (kap == 0.0 && x1 == 0.0 && x2 == 0.0 && x3 == 0.0)
                        continue; // mean mode carries no equation
                    const double xi2 = x1 * x1 + x2 * x2 + x3 * x3;
                    const cd dsym(xi2, kap - g_.par.lambda * x1);
                    const double xi[3] = {x1, x2, x3};
                    const cd pv = p_hat.at(s, i1, i2, i3, 0);
                    for (int c = 0; c < 3; ++c) {
                        const cd r = dsym * u_hat.at(s, i1, i2, i3, c) +
                                     n_hat.at(s, i1, i2, i3, c) +
                                     cd(0.0, xi[c]) * pv -
                                     f_hat.at(s, i1, i2, i3, c);
                        const double a = std::abs(r);
                        if (a > best) best = a;
                    }
                }
    }
    return best;
}

SolveResult Solver::solve(const Field& f_phys) const {
    f_phys.require(g_, Repr::physical, "solve");
    guard_finite(f_phys, "solve: forcing");

    Field f_hat = f_phys;
    fft_.forward(f_hat);
    mult_.dealias(f_hat);

    SolveResult out;
    out.f_max = max_abs(f_hat);

    Field u_hat(g_, 3, Repr::spectral);
    Field n_hat(g_, 3, Repr::spectral);
    Field p_hat(g_, 1, Repr::spectral);

    for (int it = 1; it <= g_.par.max_iter; ++it) {
        // g = P_H(f - N(u)); velocity update through the two resolvents.
        Field gh = f_hat;
        for (size_t q = 0; q < gh.data.size(); ++q) gh.data[q] -= n_hat.data[q];
        p_hat = mult_.pressure(gh); // pressure from the unprojected balance
        mult_.helmholtz(gh);
        Field u_st = mult_.steady_inverse(gh);
        Field u_os = mult_.oscillatory_inverse(gh);
        for (size_t q = 0; q < u_st.data.size(); ++q)
            u_st.data[q] += u_os.data[q];
        mult_.dealias(u_st);
        u_hat = u_st;
        guard_finite(u_hat, "solve: iterate");
        if (it == 1) out.first_iterate = u_hat;

        // Gate on the full PDE residual at the new iterate.
        n_hat = nonlinear_divergence(u_hat);
        const double res = residual_max(u_hat, p_hat, n_hat, f_hat);
        out.residual_history.push_back(res);
        out.iterations = it;
        out.final_residual = res;
        if (res <= g_.par.tol_solver * out.f_max) {
            out.converged = true;
            break;
        }
    }

    // Pressure consistent with the converged velocity.
    {
        Field gh = f_hat;
        for (size_t q = 0; q < gh.data.size(); ++q) gh.data[q] -= n_hat.data[q];
        p_hat = mult_.pressure(gh);
    }

    out.u_hat = u_hat;
    out.p_hat = p_hat;
    out.divergence_rel = divergence_max_rel(g_, u_hat);

    Field up = u_hat;
    fft_.inverse(up);
    out.amplitude = max_speed(up);
    return out;
}

double Solver::manufactured_roundtrip(const Field& w_hat) const {
    w_hat.require(g_, Repr::spectral, "manufactured_roundtrip");
    // Reject steady content: the oscillatory resolvent cannot represent it.
    for (int i1 = 0; i1 < g_.n; ++i1)
        for (int i2 = 0; i2 < g_.n; ++i2)
            for (int i3 = 0; i3 < g_.n; ++i3)
                for (int c = 0; c < w_hat.comps; ++c)
                    if (std::abs(w_hat.at(0, i1, i2, i3, c)) != 0.0)
                        throw ConfigError(
                            "manufactured_roundtrip: input must be purely "
                            "time-periodic (zero steady part)");

    Field f_hat(g_, w_hat.comps, Repr::spectral);
    for (int s = 0; s < g_.nt; ++s) {
        const double kap = g_.kap_map[s];
        for (int i1 = 0; i1 < g_.n; ++i1)
            for (int i2 = 0; i2 < g_.n; ++i2)
                for (int i3 = 0; i3 < g_.n; ++i3) {
                    const double x1 = g_.xi_map[i1];
                    const double x2 = g_.xi_map[i2];
                    const double x3 = g_.xi_map[i3];
                    const double xi2 = x1 * x1 + x2 * x2 + x3 * x3;
                    const cd dsym(xi2, kap - g_.par.lambda * x1);
                    for (int c = 0; c < w_hat.comps; ++c)
                        f_hat.at(s, i1, i2, i3, c) =
                            dsym * w_hat.at(s, i1, i2, i3, c);
                }
    }
    Field back = mult_.oscillatory_inverse(f_hat);
    double err = 0.0;
    double ref = 0.0;
    for (size_t q = 0; q < back.data.size(); ++q) {
        err = std::max(err, std::abs(back.data[q] - w_hat.data[q]));
        ref = std::max(ref, std::abs(w_hat.data[q]));
    }
    if (ref == 0.0) throw ConfigError("manufactured_roundtrip: zero input");
    return err / ref;
}

} // namespace tpns
