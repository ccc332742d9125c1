// Scalar special functions: principal complex square root with nonnegative
// real part, the entire exponential-integral combination E and its first
// three derivatives, Legendre polynomials with derivatives, Gauss-Legendre
// nodes and scaled modified spherical Bessel functions.
#pragma once

#include <complex>
#include <vector>

namespace tpns {

using cd = std::complex<double>;

/// Principal square root: the branch with Re >= 0 (and Im >= 0 on the cut).
cd sqrt_nnr(cd z);

/// E(s) = gamma_E + log|s| + E_1(s), continued as the entire power series
/// sum_{n>=1} (-1)^{n+1} s^n / (n n!). Exact E(0) = 0.
double oseen_E(double s);

/// E and its first three derivatives at s (series for small |s|, closed
/// exponential forms otherwise).
struct EDerivs {
    double E, E1, E2, E3;
};
EDerivs oseen_E_derivs(double s);

/// Legendre P_n(t) for n = 0..nmax along with d/dt derivatives up to order
/// `orders` (0..3). out[d][n] = d-th derivative of P_n at t.
void legendre_all(double t, int nmax, int orders,
                  std::vector<std::vector<double>>& out);

/// Gauss-Legendre nodes/weights on [a, b], fixed order (GSL tables).
void gl_nodes(int order, double a, double b, std::vector<double>& nodes,
              std::vector<double>& weights);

/// Exponentially scaled modified spherical Bessel functions:
/// out[n] = e^{-|x|} i_n(x) for n = 0..nmax, x >= 0.
void bessel_i_scaled(double x, int nmax, std::vector<double>& out);

} // namespace tpns
