/* Public C API for the tpns library: fundamental kernels, solution operators,
 * and verification runs for the small-amplitude time-periodic flow problem
 * with nonzero drift in three space dimensions.
 *
 * All functions return tpns_status (TPNS_OK == 0 on success). On failure,
 * tpns_last_error() returns a thread-local human-readable message.
 */
#ifndef TPNS_H
#define TPNS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values 0..3 double as process exit codes for runs. */
typedef enum tpns_status {
    TPNS_OK = 0,           /* success / all verifications passed */
    TPNS_ERR_VERIFY = 1,   /* a verification check evaluated to fail */
    TPNS_ERR_CONFIG = 2,   /* invalid parameters or malformed configuration */
    TPNS_ERR_NUMERIC = 3,  /* NaN/Inf or numerical abort during computation */
    TPNS_ERR_INVALID = 4,  /* bad handle or argument misuse */
    TPNS_ERR_IO = 5        /* filesystem failure */
} tpns_status;

/* Library version string, e.g. "1.0.0". */
const char* tpns_version(void);

/* Thread-local message for the most recent failure in this thread. */
const char* tpns_last_error(void);

/* ---- Discretization / problem parameters (opaque handle) ---- */

typedef struct tpns_params tpns_params;

/* Create a parameter set. n_temporal is the temporal mode half-count
 * (modes -n_temporal..n_temporal; 2*n_temporal+1 time samples).
 * Requires lambda != 0, period > 0, box_half_length > 0, n_spatial >= 4
 * and even, n_temporal >= 1. */
tpns_status tpns_params_create(double lambda, double period,
                               double box_half_length, int n_spatial,
                               int n_temporal, tpns_params** out);
void tpns_params_destroy(tpns_params* p);

/* ---- Scalar special functions ---- */

/* Principal square root with nonnegative real part: out_re + i*out_im. */
tpns_status tpns_sqrt_nnr(double z_re, double z_im, double* out_re,
                          double* out_im);

/* Entire function E(s) = gamma_E + log|s| + E_1(s) continued through s<=0
 * (power series sum_{n>=1} (-1)^{n+1} s^n / (n*n!)). */
tpns_status tpns_oseen_E(double s, double* out);

/* Scalar potential of the steady drift problem at x (length 3). */
tpns_status tpns_oseen_phi(const double x[3], double lambda, double* out);

/* Steady fundamental tensor at x: out[3*j+l] = Gamma_{jl}(x). */
tpns_status tpns_oseen_gamma(const double x[3], double lambda, double out[9]);

/* Gradient of the steady fundamental tensor: out[9*i+3*j+l] = d_i Gamma_{jl}. */
tpns_status tpns_oseen_gamma_grad(const double x[3], double lambda,
                                  double out[27]);

/* ---- Per-mode kernels (temporal mode k) ---- */

/* Scalar mode kernel e^{-sigma_k |x| - (lambda/2) x_1} / (4 pi |x|).
 * k may be any integer; k == 0 requires lambda != 0 (steady scalar kernel
 * limit is not provided here), while lambda == 0 requires k != 0. */
tpns_status tpns_mode_scalar_kernel(int k, const double x[3], double lambda,
                                    double period, double* out_re,
                                    double* out_im);

/* Velocity mode kernel, 3x3 complex. route: 0 = convolution (semi-analytic
 * multipole), 1 = spectral (lattice symbol inversion; slow, test oracle). */
tpns_status tpns_mode_velocity_kernel(const tpns_params* p, int k,
                                      const double x[3], int route,
                                      double out_re[9], double out_im[9]);

/* Gradient of the velocity mode kernel (convolution route only):
 * out[9*i+3*j+l] = d_i Gamma_{k,jl}(x). */
tpns_status tpns_mode_velocity_kernel_grad(const tpns_params* p, int k,
                                           const double x[3],
                                           double out_re[27],
                                           double out_im[27]);

/* Time-slice L^2 aggregate of the purely periodic kernel part at x:
 * deriv = 0 -> sqrt(sum_{0<|k|<=k_max} |Gamma_k(x)|_F^2),
 * deriv = 1 -> same with gradient tensors. */
tpns_status tpns_tp_kernel_l2t(const tpns_params* p, const double x[3],
                               int k_max, int deriv, double* out);

/* ---- Fits ---- */

/* Least-squares power-law fit value ~ c * r^{-alpha} on log-log axes.
 * Requires count >= 4, radii strictly increasing with radii[count-1] >=
 * 4*radii[0], and all values > 0. */
tpns_status tpns_fit_decay(const double* radii, const double* values,
                           size_t count, double* alpha, double* c_fit,
                           double* r_squared);

/* ---- Runs ---- */

/* Execute a full run from a JSON configuration string.
 * config_path is used only for error messages (may be NULL).
 * out_dir_override / task_override may be NULL; threads <= 0 means 1.
 * Returns TPNS_OK, TPNS_ERR_VERIFY, TPNS_ERR_CONFIG or TPNS_ERR_NUMERIC,
 * matching the CLI exit-code contract. */
tpns_status tpns_run_json(const char* config_json, const char* config_path,
                          const char* out_dir_override,
                          const char* task_override, int threads);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TPNS_H */
