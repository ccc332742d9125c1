// Aggregates of the purely periodic kernel part (modes k != 0): real time
// slices via Hermitian pairing and the time-L^2 Frobenius magnitude, for the
// kernel and its gradient.
#pragma once

#include "mode_table.hpp"

namespace tpns {

/// Real 3x3 time slice sum_{0<|k|<=k_max} e^{i kappa_k t} Gamma_k(x),
/// evaluated as 2 Re sum_{k>0}. Requires x != 0, k_max >= 1.
Mat3 tp_kernel_timeslice(ModeCache& cache, const Vec3& x, double t, int k_max,
                         double lambda, double period);

/// sqrt(sum_{0<|k|<=k_max} |Gamma_k(x)|_F^2) (deriv = 0) or the same with
/// gradient tensors (deriv = 1). Hermitian symmetry halves the work.
double tp_kernel_l2t(ModeCache& cache, const Vec3& x, int k_max, int deriv,
                     double lambda, double period);

/// Time-quadrature cross-check of the deriv=0 aggregate: evaluates
/// sqrt((1/T) sum_s |slice(t_s)|_F^2 dt) on 2*(2*k_max)+1 uniform samples
/// (exact for the band) for comparison against tp_kernel_l2t.
double tp_kernel_l2t_quadrature(ModeCache& cache, const Vec3& x, int k_max,
                                double lambda, double period);

/// Largest imaginary remainder of the Hermitian pairing at x over a sample
/// of times (diagnostic; should vanish to rounding).
double tp_kernel_imag_defect(ModeCache& cache, const Vec3& x, int k_max,
                             double lambda, double period);

} // namespace tpns
