// Steady drift (k = 0) fundamental solution: scalar potential, velocity
// tensor, its gradient, and a wake-refined sphere quadrature of the gradient
// magnitude. Negative drift is handled by the exact x1-mirror reduction.
#pragma once

#include <array>

namespace tpns {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Ten3 = std::array<Mat3, 3>; ///< [i][j][l] = d_i T_{jl}

/// Scalar potential of the steady problem. For lambda > 0 this equals
/// E(lambda(|x|+x1)/2)/(4 pi lambda); lambda < 0 uses the x1-mirror
/// (the literal continuation grows exponentially and is not a potential).
/// Requires lambda != 0 and x != 0.
double oseen_phi(const Vec3& x, double lambda);

/// Velocity tensor Gamma_{jl}(x) of the steady problem.
Mat3 oseen_gamma(const Vec3& x, double lambda);

/// Tensor and gradient together (shares the expensive evaluations).
void oseen_gamma_full(const Vec3& x, double lambda, Mat3& gamma, Ten3& grad);

/// Frobenius norms |Gamma(x)| and |grad Gamma(x)|.
double oseen_gamma_norm(const Vec3& x, double lambda);
double oseen_gamma_grad_norm(const Vec3& x, double lambda);

/// Downstream unit direction (slow-decay axis): -sign(lambda) e1.
Vec3 oseen_downstream(double lambda);

/// Integral of |grad Gamma|_F over the sphere |x| = r, computed with
/// psi-panels geometrically refined toward the wake axis and fixed-order
/// Gauss-Legendre per panel. refine doubles the per-panel order.
double oseen_sphere_gradnorm_integral(double r, double lambda, int n_gl = 24,
                                      bool refine = false);

} // namespace tpns
