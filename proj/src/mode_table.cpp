// Per-mode kernel implementation: closed forms, radial tables, assembly.
#include "mode_table.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "special.hpp"

namespace tpns {

namespace {

double norm3(const Vec3& x) {
    return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
}

// Natural cubic spline second derivatives for many interleaved series:
// values[node * stride + column] over shared knots. Thomas algorithm.
void spline_moments(const std::vector<double>& xs, const std::vector<cd>& val,
                    int stride, std::vector<cd>& mom) {
    const int m = (int)xs.size();
    mom.assign(val.size(), cd(0.0, 0.0));
    if (m < 3) return;
    std::vector<double> diag(m, 0.0), upper(m, 0.0);
    std::vector<cd> rhs(m);
    for (int col = 0; col < stride; ++col) {
        // assemble interior equations
        for (int i = 1; i + 1 < m; ++i) {
            double h0 = xs[i] - xs[i - 1];
            double h1 = xs[i + 1] - xs[i];
            diag[i] = (h0 + h1) / 3.0;
            upper[i] = h1 / 6.0;
            cd d1 = (val[(size_t)(i + 1) * stride + col] -
                     val[(size_t)i * stride + col]) /
                    h1;
            cd d0 = (val[(size_t)i * stride + col] -
                     val[(size_t)(i - 1) * stride + col]) /
                    h0;
            rhs[i] = d1 - d0;
        }
        // forward sweep (natural ends: M_0 = M_{m-1} = 0)
        std::vector<double> cp(m, 0.0);
        std::vector<cd> dp(m);
        double lower1 = (xs[1] - xs[0]) / 6.0; // unused at boundary row
        (void)lower1;
        cp[1] = upper[1] / diag[1];
        dp[1] = rhs[1] / diag[1];
        for (int i = 2; i + 1 < m; ++i) {
            double low = (xs[i] - xs[i - 1]) / 6.0;
            double denom = diag[i] - low * cp[i - 1];
            cp[i] = upper[i] / denom;
            dp[i] = (rhs[i] - low * dp[i - 1]) / denom;
        }
        for (int i = m - 2; i >= 1; --i) {
            cd mi = dp[i];
            if (i + 1 <= m - 2) mi -= cp[i] * mom[(size_t)(i + 1) * stride + col];
            mom[(size_t)i * stride + col] = mi;
        }
    }
}

} // namespace

cd mode_sigma(int k, double lambda, double period) {
    if (!(period > 0.0)) throw ConfigError("mode_sigma: period must be positive");
    double kap = 2.0 * M_PI * k / period;
    return sqrt_nnr(cd(0.25 * lambda * lambda, kap));
}

cd mode_scalar_kernel(int k, const Vec3& x, double lambda, double period) {
    if (k == 0)
        throw ConfigError("mode_scalar_kernel: k must be a nonzero mode");
    double r = norm3(x);
    if (!(r > 0.0)) throw ConfigError("mode_scalar_kernel: x must be nonzero");
    cd sig = mode_sigma(k, lambda, period);
    return std::exp(-sig * r - cd(0.5 * lambda * x[0], 0.0)) /
           (4.0 * M_PI * r);
}

std::array<cd, 3> mode_scalar_kernel_grad(int k, const Vec3& x, double lambda,
                                          double period) {
    double r = norm3(x);
    cd g = mode_scalar_kernel(k, x, lambda, period);
    cd sig = mode_sigma(k, lambda, period);
    std::array<cd, 3> out;
    for (int i = 0; i < 3; ++i)
        out[i] = g * (-sig * x[i] / r - cd(0.5 * lambda * (i == 0 ? 1.0 : 0.0), 0.0) -
                      x[i] / (r * r));
    return out;
}

CMat3 mode_scalar_kernel_hess(int k, const Vec3& x, double lambda,
                              double period) {
    // Gamma_R = f(r) g(x1), f = e^{-sigma r}/(4 pi r), g = e^{-(lambda/2) x1}.
    double r = norm3(x);
    if (!(r > 0.0)) throw ConfigError("mode_scalar_kernel_hess: x must be nonzero");
    if (k == 0)
        throw ConfigError("mode_scalar_kernel_hess: k must be a nonzero mode");
    cd sig = mode_sigma(k, lambda, period);
    double hl = 0.5 * lambda;
    cd f = std::exp(-sig * r) / (4.0 * M_PI * r);
    double gfac = std::exp(-hl * x[0]);
    cd fp = -(sig + 1.0 / r) * f;
    cd fpp = (sig * sig + 2.0 * sig / r + 2.0 / (r * r)) * f;
    CMat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double di = (i == 0) ? 1.0 : 0.0;
            double dj = (j == 0) ? 1.0 : 0.0;
            cd term = fpp * x[i] * x[j] / (r * r) +
                      fp * (((i == j) ? 1.0 : 0.0) / r - x[i] * x[j] / (r * r * r));
            term += (-hl) * fp * (x[i] * dj + x[j] * di) / r;
            term += f * (hl * hl) * di * dj;
            out[i][j] = term * gfac;
        }
    return out;
}

ModeTable::ModeTable(int k, double lambda_abs, double period, int nmax,
                     double rmin, int npts)
    : k_(k), lam_(lambda_abs), period_(period), nmax_(nmax) {
    if (k <= 0) throw ConfigError("ModeTable: k must be positive");
    if (!(lambda_abs > 0.0)) throw ConfigError("ModeTable: drift required");
    sigma_ = mode_sigma(k, lambda_abs, period);
    double c = sigma_.real() - 0.5 * lam_;
    if (!(c > 0.0)) throw NumericError("ModeTable: nonpositive decay rate");
    double rk = std::min(23.03 / c, 160.0);

    grid_.resize(npts);
    double lg0 = std::log(rmin), lg1 = std::log(rk);
    for (int i = 0; i < npts; ++i)
        grid_[i] = std::exp(lg0 + (lg1 - lg0) * i / (npts - 1.0));
    grid_.front() = rmin;
    grid_.back() = rk;

    const int nn = nmax_ + 1;
    std::vector<double> gx, gw;
    gl_nodes(10, -1.0, 1.0, gx, gw);

    std::vector<cd> at((size_t)npts * nn), bt((size_t)npts * nn);
    std::vector<cd> rho(nn), acc(nn);

    // A~_n(r_0): integral over [0, r_0] of s (s/r_0)^{n+1} rho_n(s) ds.
    {
        double a = 0.0, b = grid_[0];
        std::fill(acc.begin(), acc.end(), cd(0.0, 0.0));
        for (size_t q = 0; q < gx.size(); ++q) {
            double s = 0.5 * (a + b) + 0.5 * (b - a) * gx[q];
            double w = 0.5 * (b - a) * gw[q];
            rho_all(s, rho);
            double ratio = s / b;
            double pw = ratio; // (s/b)^{n+1}, n = 0
            for (int n = 0; n < nn; ++n) {
                acc[n] += w * s * pw * rho[n];
                pw *= ratio;
            }
        }
        for (int n = 0; n < nn; ++n) at[n] = acc[n];
    }
    for (int i = 0; i + 1 < npts; ++i) {
        double a = grid_[i], b = grid_[i + 1];
        std::fill(acc.begin(), acc.end(), cd(0.0, 0.0));
        for (size_t q = 0; q < gx.size(); ++q) {
            double s = 0.5 * (a + b) + 0.5 * (b - a) * gx[q];
            double w = 0.5 * (b - a) * gw[q];
            rho_all(s, rho);
            double ratio = s / b;
            double pw = ratio;
            for (int n = 0; n < nn; ++n) {
                acc[n] += w * s * pw * rho[n];
                pw *= ratio;
            }
        }
        double ratio = a / b;
        double pw = ratio;
        for (int n = 0; n < nn; ++n) {
            at[(size_t)(i + 1) * nn + n] = pw * at[(size_t)i * nn + n] + acc[n];
            pw *= ratio;
        }
    }
    // B~_n backward: B~(r_i) = (r_i/r_{i+1})^n B~(r_{i+1}) + \int_{r_i}^{r_{i+1}} s (r_i/s)^n rho_n ds
    for (int n = 0; n < nn; ++n) bt[(size_t)(npts - 1) * nn + n] = cd(0.0, 0.0);
    for (int i = npts - 2; i >= 0; --i) {
        double a = grid_[i], b = grid_[i + 1];
        std::fill(acc.begin(), acc.end(), cd(0.0, 0.0));
        for (size_t q = 0; q < gx.size(); ++q) {
            double s = 0.5 * (a + b) + 0.5 * (b - a) * gx[q];
            double w = 0.5 * (b - a) * gw[q];
            rho_all(s, rho);
            double ratio = a / s;
            double pw = 1.0; // (a/s)^n, n = 0
            for (int n = 0; n < nn; ++n) {
                acc[n] += w * s * pw * rho[n];
                pw *= ratio;
            }
        }
        double ratio = a / b;
        double pw = 1.0;
        for (int n = 0; n < nn; ++n) {
            bt[(size_t)i * nn + n] = pw * bt[(size_t)(i + 1) * nn + n] + acc[n];
            pw *= ratio;
        }
    }

    u_val_.resize((size_t)npts * nn);
    up_val_.resize((size_t)npts * nn);
    for (int i = 0; i < npts; ++i) {
        double r = grid_[i];
        for (int n = 0; n < nn; ++n) {
            cd A = at[(size_t)i * nn + n];
            cd B = bt[(size_t)i * nn + n];
            u_val_[(size_t)i * nn + n] = (A + B) / (2.0 * n + 1.0);
            up_val_[(size_t)i * nn + n] =
                (-(n + 1.0) * A + (double)n * B) / ((2.0 * n + 1.0) * r);
        }
    }
    a_inf_.assign(nn, cd(0.0, 0.0));
    for (int n = 0; n < nn; ++n) a_inf_[n] = at[(size_t)(npts - 1) * nn + n];

    spline_moments(grid_, u_val_, nn, u_mom_);
    spline_moments(grid_, up_val_, nn, up_mom_);
}

void ModeTable::rho_all(double s, std::vector<cd>& out) const {
    const int nn = nmax_ + 1;
    out.resize(nn);
    double z = 0.5 * lam_ * s;
    std::vector<double> bi;
    bessel_i_scaled(z, nmax_, bi);
    // rho_n(s) = (2n+1)(-1)^n i_n(z) e^{-sigma s}/(4 pi s); with the scaled
    // i_n this is (2n+1)(-1)^n si_n e^{(z - sigma s)} / (4 pi s), and
    // Re(sigma) s - z = c_k s > 0 keeps the exponent decaying.
    cd expo = std::exp(cd(z, 0.0) - sigma_ * s) / (4.0 * M_PI * s);
    for (int n = 0; n < nn; ++n) {
        double sign = (n % 2 == 0) ? 1.0 : -1.0;
        out[n] = (2.0 * n + 1.0) * sign * bi[n] * expo;
    }
}

void ModeTable::rho_prime_all(double s, std::vector<cd>& out) const {
    const int nn = nmax_ + 1;
    out.resize(nn);
    double z = 0.5 * lam_ * s;
    std::vector<double> bi;
    bessel_i_scaled(z, nmax_ + 1, bi);
    cd expo = std::exp(cd(z, 0.0) - sigma_ * s) / (4.0 * M_PI * s);
    for (int n = 0; n < nn; ++n) {
        double sign = (n % 2 == 0) ? 1.0 : -1.0;
        // i_n'(z) = i_{n-1}(z) - ((n+1)/z) i_n(z); i_0' = i_1.
        double ip;
        if (n == 0)
            ip = bi[1];
        else if (z > 0.0)
            ip = bi[n - 1] - (n + 1.0) / z * bi[n];
        else
            ip = (n == 1) ? (1.0 / 3.0) : 0.0; // i_n'(0)
        cd pref = (2.0 * n + 1.0) * sign * expo;
        out[n] = pref * (0.5 * lam_ * ip - (sigma_ + 1.0 / s) * bi[n]);
    }
}

void ModeTable::spline_eval(double r, const std::vector<cd>& val,
                            const std::vector<cd>& mom,
                            std::vector<cd>& out) const {
    const int nn = nmax_ + 1;
    out.resize(nn);
    auto it = std::upper_bound(grid_.begin(), grid_.end(), r);
    int i = (int)(it - grid_.begin()) - 1;
    if (i < 0) i = 0;
    if (i > (int)grid_.size() - 2) i = (int)grid_.size() - 2;
    double h = grid_[i + 1] - grid_[i];
    double A = (grid_[i + 1] - r) / h;
    double B = (r - grid_[i]) / h;
    double ca = (A * A * A - A) * h * h / 6.0;
    double cb = (B * B * B - B) * h * h / 6.0;
    const cd* v0 = &val[(size_t)i * nn];
    const cd* v1 = &val[(size_t)(i + 1) * nn];
    const cd* m0 = &mom[(size_t)i * nn];
    const cd* m1 = &mom[(size_t)(i + 1) * nn];
    for (int n = 0; n < nn; ++n)
        out[n] = A * v0[n] + B * v1[n] + ca * m0[n] + cb * m1[n];
}

void ModeTable::radial(double r, std::vector<cd>& u, std::vector<cd>& up,
                       std::vector<cd>& upp, std::vector<cd>& uppp) const {
    const int nn = nmax_ + 1;
    if (!(r > 0.0)) throw ConfigError("ModeTable.radial: r must be positive");
    if (r < grid_.front())
        throw ConfigError("ModeTable.radial: r below the table domain");
    u.resize(nn);
    up.resize(nn);
    upp.resize(nn);
    uppp.resize(nn);
    if (r > grid_.back()) {
        // Harmonic exterior continuation past the exponential cutoff:
        // u_n = A_inf (R/r)^{n+1} / (2n+1), source negligible.
        double R = grid_.back();
        double ratio = R / r;
        double pw = ratio; // (R/r)^{n+1}, n = 0
        for (int n = 0; n < nn; ++n) {
            cd un = a_inf_[n] * pw / (2.0 * n + 1.0);
            cd upn = -(n + 1.0) * un / r;
            u[n] = un;
            up[n] = upn;
            upp[n] = -2.0 * upn / r + (double)n * (n + 1.0) * un / (r * r);
            uppp[n] = -2.0 * upp[n] / r + 2.0 * upn / (r * r) +
                      (double)n * (n + 1.0) *
                          (upn / (r * r) - 2.0 * un / (r * r * r));
            pw *= ratio;
        }
        return;
    }
    spline_eval(r, u_val_, u_mom_, u);
    spline_eval(r, up_val_, up_mom_, up);
    std::vector<cd> rho, rhop;
    rho_all(r, rho);
    rho_prime_all(r, rhop);
    for (int n = 0; n < nn; ++n) {
        double nn1 = (double)n * (n + 1.0);
        upp[n] = -rho[n] - 2.0 * up[n] / r + nn1 * u[n] / (r * r);
        uppp[n] = -rhop[n] - 2.0 * upp[n] / r + 2.0 * up[n] / (r * r) +
                  nn1 * (up[n] / (r * r) - 2.0 * u[n] / (r * r * r));
    }
}

const ModeTable& ModeCache::get(int k_abs) {
    if (k_abs <= 0) throw ConfigError("ModeCache: k must be positive");
    std::lock_guard<std::mutex> lk(mu_);
    auto it = tables_.find(k_abs);
    if (it == tables_.end()) {
        auto tab = std::make_unique<ModeTable>(k_abs, lam_, period_);
        it = tables_.emplace(k_abs, std::move(tab)).first;
    }
    return *it->second;
}

namespace {

// Hessian of U = sum_n u_n(r) P_n(x1/r) at x (upper-half mode, lambda > 0).
CMat3 hess_series(const ModeTable& tab, const Vec3& x) {
    double r = norm3(x);
    double t = x[0] / r;
    std::vector<cd> u, up, upp, uppp;
    tab.radial(r, u, up, upp, uppp);
    std::vector<std::vector<double>> P;
    legendre_all(t, tab.nmax(), 2, P);

    cd S_upp_P = 0.0, S_up_dP = 0.0, S_up_P = 0.0, S_u_d2P = 0.0, S_u_dP = 0.0;
    for (int n = 0; n <= tab.nmax(); ++n) {
        S_upp_P += upp[n] * P[0][n];
        S_up_dP += up[n] * P[1][n];
        S_up_P += up[n] * P[0][n];
        S_u_d2P += u[n] * P[2][n];
        S_u_dP += u[n] * P[1][n];
    }
    Vec3 xh{x[0] / r, x[1] / r, x[2] / r};
    Vec3 v{(1.0 - t * xh[0]) / r, (-t * xh[1]) / r, (-t * xh[2]) / r};
    CMat3 H;
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
            double A_jl = ((j == l) ? 1.0 : 0.0) - xh[j] * xh[l];
            H[j][l] = S_upp_P * xh[j] * xh[l] +
                      S_up_dP * (xh[j] * v[l] + v[j] * xh[l]) +
                      S_up_P * A_jl / r + S_u_d2P * v[j] * v[l] +
                      S_u_dP * (-(v[j] * xh[l] + xh[j] * v[l]) / r -
                                t * A_jl / (r * r));
        }
    return H;
}

// Exact d_j d_l v_i for v = (e1 - t xh)/r.
double third_v(int i, int j, int l, const Vec3& xh, const Vec3& v, double t,
               double r) {
    auto Afun = [&](int a, int b) {
        return ((a == b) ? 1.0 : 0.0) - xh[a] * xh[b];
    };
    auto dv = [&](int a, int b) {
        return -(v[b] * xh[a] + v[a] * xh[b]) / r - t * Afun(a, b) / (r * r);
    };
    auto dxh = [&](int a, int b) { return Afun(a, b) / r; };
    double t1 = -(dv(l, j) * xh[i] + v[l] * dxh(i, j) + dv(i, j) * xh[l] +
                  v[i] * dxh(l, j)) /
                    r +
                (v[l] * xh[i] + v[i] * xh[l]) * xh[j] / (r * r);
    double dA = -(dxh(i, j) * xh[l] + xh[i] * dxh(l, j));
    double t2 = -(v[j] * Afun(i, l) + t * dA) / (r * r) +
                2.0 * t * Afun(i, l) * xh[j] / (r * r * r);
    return t1 + t2;
}

// Third-derivative tensor of U at x (upper-half mode, lambda > 0).
CTen3 third_series(const ModeTable& tab, const Vec3& x) {
    double r = norm3(x);
    double t = x[0] / r;
    std::vector<cd> u, up, upp, uppp;
    tab.radial(r, u, up, upp, uppp);
    std::vector<std::vector<double>> P;
    legendre_all(t, tab.nmax(), 3, P);

    cd g_r = 0.0, g_t = 0.0, g_rr = 0.0, g_rt = 0.0, g_tt = 0.0;
    cd g_rrr = 0.0, g_rrt = 0.0, g_rtt = 0.0, g_ttt = 0.0;
    for (int n = 0; n <= tab.nmax(); ++n) {
        g_r += up[n] * P[0][n];
        g_t += u[n] * P[1][n];
        g_rr += upp[n] * P[0][n];
        g_rt += up[n] * P[1][n];
        g_tt += u[n] * P[2][n];
        g_rrr += uppp[n] * P[0][n];
        g_rrt += upp[n] * P[1][n];
        g_rtt += up[n] * P[2][n];
        g_ttt += u[n] * P[3][n];
    }
    Vec3 xh{x[0] / r, x[1] / r, x[2] / r};
    Vec3 v{(1.0 - t * xh[0]) / r, (-t * xh[1]) / r, (-t * xh[2]) / r};
    CTen3 T;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) {
                double A_jl = ((j == l) ? 1.0 : 0.0) - xh[j] * xh[l];
                double A_il = ((i == l) ? 1.0 : 0.0) - xh[i] * xh[l];
                double A_ij = ((i == j) ? 1.0 : 0.0) - xh[i] * xh[j];
                cd val =
                    g_rrr * xh[i] * xh[j] * xh[l] +
                    g_rrt * (xh[i] * xh[j] * v[l] + xh[i] * v[j] * xh[l] +
                             v[i] * xh[j] * xh[l]) +
                    g_rtt * (xh[i] * v[j] * v[l] + v[i] * xh[j] * v[l] +
                             v[i] * v[j] * xh[l]) +
                    g_ttt * v[i] * v[j] * v[l] +
                    g_rr * (A_ij * xh[l] + A_il * xh[j] + A_jl * xh[i]) / r +
                    g_rt * ((A_ij * v[l] + A_il * v[j] + A_jl * v[i]) / r -
                            (xh[i] * (v[j] * xh[l] + xh[j] * v[l]) +
                             xh[j] * (v[i] * xh[l] + xh[i] * v[l]) +
                             xh[l] * (v[i] * xh[j] + xh[i] * v[j])) /
                                r -
                            t * (xh[i] * A_jl + xh[j] * A_il + xh[l] * A_ij) /
                                (r * r)) +
                    g_r * (-(A_ij * xh[l] + A_il * xh[j] + A_jl * xh[i]) /
                           (r * r)) +
                    g_tt * (-(v[i] * (v[j] * xh[l] + xh[j] * v[l]) +
                              v[j] * (v[i] * xh[l] + xh[i] * v[l]) +
                              v[l] * (v[i] * xh[j] + xh[i] * v[j])) /
                                r -
                            t * (v[i] * A_jl + v[j] * A_il + v[l] * A_ij) /
                                (r * r)) +
                    g_t * third_v(i, j, l, xh, v, t, r);
                T[i][j][l] = val;
            }
    return T;
}

void require_mode_args(int k, const Vec3& x, double lambda, const char* who) {
    if (k == 0) throw ConfigError(std::string(who) + ": k must be nonzero");
    if (lambda == 0.0)
        throw ConfigError(std::string(who) + ": drift required (lambda != 0)");
    double r = norm3(x);
    if (!(r > 0.0)) throw ConfigError(std::string(who) + ": x must be nonzero");
}

} // namespace

CMat3 mode_velocity_kernel(ModeCache& cache, int k, const Vec3& x,
                           double lambda, double period) {
    require_mode_args(k, x, lambda, "mode_velocity_kernel");
    if (k < 0) {
        CMat3 g = mode_velocity_kernel(cache, -k, x, lambda, period);
        for (auto& row : g)
            for (auto& v : row) v = std::conj(v);
        return g;
    }
    if (lambda < 0.0) {
        Vec3 xm{-x[0], x[1], x[2]};
        CMat3 g = mode_velocity_kernel(cache, k, xm, -lambda, period);
        auto ms = [](int a) { return a == 0 ? -1.0 : 1.0; };
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) g[j][l] *= ms(j) * ms(l);
        return g;
    }
    const ModeTable& tab = cache.get(k);
    cd gR = mode_scalar_kernel(k, x, lambda, period);
    CMat3 H = hess_series(tab, x);
    for (int j = 0; j < 3; ++j) H[j][j] += gR;
    return H;
}

CTen3 mode_velocity_kernel_grad(ModeCache& cache, int k, const Vec3& x,
                                double lambda, double period) {
    require_mode_args(k, x, lambda, "mode_velocity_kernel_grad");
    if (k < 0) {
        CTen3 g = mode_velocity_kernel_grad(cache, -k, x, lambda, period);
        for (auto& mat : g)
            for (auto& row : mat)
                for (auto& v : row) v = std::conj(v);
        return g;
    }
    if (lambda < 0.0) {
        Vec3 xm{-x[0], x[1], x[2]};
        CTen3 g = mode_velocity_kernel_grad(cache, k, xm, -lambda, period);
        auto ms = [](int a) { return a == 0 ? -1.0 : 1.0; };
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l) g[i][j][l] *= ms(i) * ms(j) * ms(l);
        return g;
    }
    const ModeTable& tab = cache.get(k);
    std::array<cd, 3> dgR = mode_scalar_kernel_grad(k, x, lambda, period);
    CTen3 T = third_series(tab, x);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) T[i][j][j] += dgR[i];
    return T;
}

double mode_kernel_norm(ModeCache& cache, int k, const Vec3& x, double lambda,
                        double period) {
    CMat3 g = mode_velocity_kernel(cache, k, x, lambda, period);
    double acc = 0.0;
    for (const auto& row : g)
        for (const auto& v : row) acc += std::norm(v);
    return std::sqrt(acc);
}

double mode_kernel_grad_norm(ModeCache& cache, int k, const Vec3& x,
                             double lambda, double period) {
    CTen3 g = mode_velocity_kernel_grad(cache, k, x, lambda, period);
    double acc = 0.0;
    for (const auto& mat : g)
        for (const auto& row : mat)
            for (const auto& v : row) acc += std::norm(v);
    return std::sqrt(acc);
}

} // namespace tpns
