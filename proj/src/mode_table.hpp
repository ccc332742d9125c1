// Per-mode (temporal frequency k != 0) fundamental kernels: the closed-form
// scalar kernel Gamma_{R,k}, and the velocity kernel/gradient via the
// convolution route — an exact axisymmetric multipole reduction of the
// Newtonian potential of Gamma_{R,k}, tabulated radially per mode and
// interpolated with cubic splines. u_n'' and u_n''' are recovered from the
// radial ODE at the evaluation point, so differentiated series lose no
// accuracy to spline differentiation.
#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "oseen.hpp"

namespace tpns {

using cd = std::complex<double>;
using CMat3 = std::array<std::array<cd, 3>, 3>;
using CTen3 = std::array<CMat3, 3>; ///< [i][j][l] = d_i T_{jl}

/// sigma_k = sqrt(i kappa_k + lambda^2/4), principal branch (Re >= 0).
cd mode_sigma(int k, double lambda, double period);

/// Scalar kernel e^{-sigma_k r - (lambda/2) x1} / (4 pi r). Requires k != 0
/// (steady limit excluded) and x != 0; lambda may be zero when k != 0.
cd mode_scalar_kernel(int k, const Vec3& x, double lambda, double period);

/// Gradient of the scalar kernel, out[i] = d_i Gamma_{R,k}(x).
std::array<cd, 3> mode_scalar_kernel_grad(int k, const Vec3& x, double lambda,
                                          double period);

/// Second derivatives, out[i][j] = d_i d_j Gamma_{R,k}(x).
CMat3 mode_scalar_kernel_hess(int k, const Vec3& x, double lambda,
                              double period);

/// Radial multipole table for one mode k > 0 at drift |lambda|.
/// The potential U = Phi_L * Gamma_{R,k} expands as sum_n u_n(r) P_n(x1/r);
/// u_n solves the radial Poisson equation sourced by the Legendre component
/// rho_n of Gamma_{R,k}, evaluated by stable ratio-scaled cumulative
/// quadrature and continued harmonically past the exponential cutoff radius.
class ModeTable {
public:
    ModeTable(int k, double lambda_abs, double period, int nmax = 60,
              double rmin = 0.05, int npts = 1400);

    /// u_n, u_n', u_n'', u_n''' for n = 0..nmax at radius r > 0.
    void radial(double r, std::vector<cd>& u, std::vector<cd>& up,
                std::vector<cd>& upp, std::vector<cd>& uppp) const;

    int nmax() const { return nmax_; }
    double rmin() const { return grid_.front(); }
    double cutoff() const { return grid_.back(); }

private:
    void rho_all(double s, std::vector<cd>& out) const;
    void rho_prime_all(double s, std::vector<cd>& out) const;
    void spline_eval(double r, const std::vector<cd>& val,
                     const std::vector<cd>& mom, std::vector<cd>& out) const;

    int k_;
    double lam_;
    double period_;
    int nmax_;
    cd sigma_;
    std::vector<double> grid_;
    // Node values and natural-spline second derivatives,
    // layout [node * (nmax+1) + n].
    std::vector<cd> u_val_, u_mom_, up_val_, up_mom_;
    std::vector<cd> a_inf_; ///< cumulative interior moment at the cutoff
};

/// Thread-safe per-(lambda, period) cache of mode tables keyed by |k|.
class ModeCache {
public:
    ModeCache(double lambda, double period)
        : lam_(std::abs(lambda)), period_(period) {}

    const ModeTable& get(int k_abs);

    double lambda_abs() const { return lam_; }
    double period() const { return period_; }

private:
    double lam_;
    double period_;
    std::mutex mu_;
    std::map<int, std::unique_ptr<ModeTable>> tables_;
};

/// Velocity kernel of mode k (3x3 complex), convolution route:
/// delta_{jl} Gamma_{R,k} + Hess(U). Handles k < 0 by conjugation and
/// lambda < 0 by the x1-mirror. Requires k != 0, lambda != 0, x != 0.
CMat3 mode_velocity_kernel(ModeCache& cache, int k, const Vec3& x,
                           double lambda, double period);

/// Gradient of the velocity kernel, out[i][j][l] = d_i Gamma_{k,jl}(x).
CTen3 mode_velocity_kernel_grad(ModeCache& cache, int k, const Vec3& x,
                                double lambda, double period);

/// Frobenius norms of kernel and gradient at x for mode k.
double mode_kernel_norm(ModeCache& cache, int k, const Vec3& x, double lambda,
                        double period);
double mode_kernel_grad_norm(ModeCache& cache, int k, const Vec3& x,
                             double lambda, double period);

} // namespace tpns
