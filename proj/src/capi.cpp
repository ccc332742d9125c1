// extern-C shared-library surface: opaque handles, status codes, and a
// thread-local error message wrapping the C++ core.
#include "tpns/tpns.h"

#include <exception>
#include <new>
#include <string>

#include "errors.hpp"
#include "fits.hpp"
#include "lattice_route.hpp"
#include "mode_table.hpp"
#include "oseen.hpp"
#include "params.hpp"
#include "runner.hpp"
#include "special.hpp"
#include "tp_kernel.hpp"

// Opaque parameter handle: validated parameters plus a per-handle cache of
// mode-kernel interpolation tables (built lazily, reused across calls).
struct tpns_params {
    tpns::Params par;
    mutable tpns::ModeCache cache; // lazily grown interpolation tables
    explicit tpns_params(const tpns::Params& p)
        : par(p), cache(p.lambda, p.period) {}
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

/// Run `fn`, translating C++ exceptions into status codes.
template <typename Fn>
tpns_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const tpns::ConfigError& e) {
        set_error(e.what());
        return TPNS_ERR_CONFIG;
    } catch (const tpns::NumericError& e) {
        set_error(e.what());
        return TPNS_ERR_NUMERIC;
    } catch (const tpns::IoError& e) {
        set_error(e.what());
        return TPNS_ERR_IO;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return TPNS_ERR_NUMERIC;
    } catch (const std::exception& e) {
        set_error(e.what());
        return TPNS_ERR_INVALID;
    }
}

bool require(bool cond, const char* what) {
    if (!cond) set_error(what);
    return cond;
}

} // namespace

extern "C" {

const char* tpns_version(void) { return "1.0.0"; }

const char* tpns_last_error(void) { return g_last_error.c_str(); }

tpns_status tpns_params_create(double lambda, double period,
                               double box_half_length, int n_spatial,
                               int n_temporal, tpns_params** out) {
    if (!require(out != nullptr, "tpns_params_create: out is NULL"))
        return TPNS_ERR_INVALID;
    *out = nullptr;
    return guarded([&]() {
        tpns::Params p;
        p.lambda = lambda;
        p.period = period;
        p.box_half_length = box_half_length;
        p.n_spatial = n_spatial;
        p.n_temporal = n_temporal;
        p.validate();
        *out = new tpns_params(p);
        return TPNS_OK;
    });
}

void tpns_params_destroy(tpns_params* p) { delete p; }

tpns_status tpns_sqrt_nnr(double z_re, double z_im, double* out_re,
                          double* out_im) {
    if (!require(out_re && out_im, "tpns_sqrt_nnr: output is NULL"))
        return TPNS_ERR_INVALID;
    return guarded([&]() {
        const tpns::cd w = tpns::sqrt_nnr(tpns::cd(z_re, z_im));
        *out_re = w.real();
        *out_im = w.imag();
        return TPNS_OK;
    });
}

tpns_status tpns_oseen_E(double s, double* out) {
    if (!require(out != nullptr, "tpns_oseen_E: out is NULL"))
        return TPNS_ERR_INVALID;
    return guarded([&]() {
        *out = tpns::oseen_E(s);
        return TPNS_OK;
    });
}

tpns_status tpns_oseen_phi(const double x[3], double lambda, double* out) {
    if (!require(x && out, "tpns_oseen_phi: argument is NULL"))
        return TPNS_ERR_INVALID;
    return guarded([&]() {
        *out = tpns::oseen_phi(tpns::Vec3{x[0], x[1], x[2]}, lambda);
        return TPNS_OK;
    });
}

tpns_status tpns_oseen_gamma(const double x[3], double lambda,
                             double out[9]) {
    if (!require(x && out, "tpns_oseen_gamma: argument is NULL"))
        return TPNS_ERR_INVALID;
    return guarded([&]() {
        const tpns::Mat3 g =
            tpns::oseen_gamma(tpns::Vec3{x[0], x[1], x[2]}, lambda);
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) out[3 * j + l] = g[j][l];
        return TPNS_OK;
    });
}

tpns_status tpns_oseen_gamma_grad(const double x[3], double lambda,
                                  double out[27]) {
    if (!require(x && out, "tpns_oseen_gamma_grad: argument is NULL"))
        return TPNS_ERR_INVALID;
    return guarded([&]() {
        tpns::Mat3 g;
        tpns::Ten3 dg;
        tpns::oseen_gamma_full(tpns::Vec3{x[0], x[1], x[2]}, lambda, g, dg);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l)
                    out[9 * i + 3 * j + l] = dg[i][j][l];
        return TPNS_OK;
    });
}

tpns_status tpns_mode_scalar_kernel(int k, const double x[3], double lambda,
                                    double period, double* out_re,
                                    double* out_im) {
    if (!require(x && out_re && out_im,
                 "tpns_mode_scalar_kernel: argument is NULL"))
        return TPNS_ERR_INVALID;
    return guarded([&]() {
        const tpns::cd v = tpns::mode_scalar_kernel(
            k, tpns::Vec3{x[0], x[1], x[2]}, lambda, period);
        *out_re = v.real();
        *out_im = v.imag();
        return TPNS_OK;
    });
}

tpns_status tpns_mode_velocity_kernel(const tpns_params* p, int k,
                                      const double x[3], int route,
                                      double out_re[9], double out_im[9]) {
    if (!require(p && x && out_re && out_im,
                 "tpns_mode_velocity_kernel: argument is NULL"))
        return TPNS_ERR_INVALID;
    if (!require(route == 0 || route == 1,
                 "tpns_mode_velocity_kernel: route must be 0 or 1"))
        return TPNS_ERR_INVALID;
    return guarded([&]() {
        const tpns::Vec3 xv{x[0], x[1], x[2]};
        tpns::CMat3 g;
        if (route == 0) {
            g = tpns::mode_velocity_kernel(
                p->cache, k, xv, p->par.lambda,
                p->par.period);
        } else {
            g = tpns::mode_velocity_kernel_spectral(
                    k, std::vector<tpns::Vec3>{xv}, p->par.lambda,
                    p->par.period)
                    .front();
        }
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) {
                out_re[3 * j + l] = g[j][l].real();
                out_im[3 * j + l] = g[j][l].imag();
            }
        return TPNS_OK;
    });
}

tpns_status tpns_mode_velocity_kernel_grad(const tpns_params* p, int k,
                                           const double x[3],
                                           double out_re[27],
                                           double out_im[27]) {
    if (!require(p && x && out_re && out_im,
                 "tpns_mode_velocity_kernel_grad: argument is NULL"))
        return TPNS_ERR_INVALID;
    return guarded([&]() {
        const tpns::CTen3 dg = tpns::mode_velocity_kernel_grad(
            p->cache, k,
            tpns::Vec3{x[0], x[1], x[2]}, p->par.lambda, p->par.period);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l) {
                    out_re[9 * i + 3 * j + l] = dg[i][j][l].real();
                    out_im[9 * i + 3 * j + l] = dg[i][j][l].imag();
                }
        return TPNS_OK;
    });
}

tpns_status tpns_tp_kernel_l2t(const tpns_params* p, const double x[3],
                               int k_max, int deriv, double* out) {
    if (!require(p && x && out, "tpns_tp_kernel_l2t: argument is NULL"))
        return TPNS_ERR_INVALID;
    if (!require(deriv == 0 || deriv == 1,
                 "tpns_tp_kernel_l2t: deriv must be 0 or 1"))
        return TPNS_ERR_INVALID;
    return guarded([&]() {
        *out = tpns::tp_kernel_l2t(p->cache,
                                   tpns::Vec3{x[0], x[1], x[2]}, k_max, deriv,
                                   p->par.lambda, p->par.period);
        return TPNS_OK;
    });
}

tpns_status tpns_fit_decay(const double* radii, const double* values,
                           size_t count, double* alpha, double* c_fit,
                           double* r_squared) {
    if (!require(radii && values && alpha && c_fit && r_squared,
                 "tpns_fit_decay: argument is NULL"))
        return TPNS_ERR_INVALID;
    return guarded([&]() {
        const std::vector<double> r(radii, radii + count);
        const std::vector<double> v(values, values + count);
        const tpns::DecayFit fit = tpns::fit_decay(r, v);
        *alpha = fit.alpha;
        *c_fit = fit.c_fit;
        *r_squared = fit.r_squared;
        return TPNS_OK;
    });
}

tpns_status tpns_run_json(const char* config_json, const char* config_path,
                          const char* out_dir_override,
                          const char* task_override, int threads) {
    if (!require(config_json != nullptr, "tpns_run_json: config_json is NULL"))
        return TPNS_ERR_INVALID;
    const tpns_status st = guarded([&]() {
        tpns::RunConfig cfg;
        try {
            cfg = tpns::parse_run_config(config_json);
        } catch (const tpns::ConfigError& e) {
            if (config_path && config_path[0] != '\0')
                throw tpns::ConfigError(std::string(config_path) + ": " +
                                        e.what());
            throw;
        }
        if (out_dir_override && out_dir_override[0] != '\0')
            cfg.output_dir = out_dir_override;
        if (task_override && task_override[0] != '\0') {
            cfg.tasks.clear();
            cfg.tasks.push_back(task_override);
            if (cfg.tasks.back().empty() ||
                !(cfg.tasks.back() == "kernels" ||
                  cfg.tasks.back() == "solve" ||
                  cfg.tasks.back() == "verify_all" ||
                  cfg.tasks.back() == "expand" ||
                  cfg.tasks.back() == "report" ||
                  cfg.tasks.back().rfind("verify:", 0) == 0))
                throw tpns::ConfigError("config: tasks: unknown task '" +
                                        cfg.tasks.back() + "'");
        }
        cfg.threads = threads > 0 ? threads : 1;
        const int rc = tpns::run_config(cfg);
        if (rc != 0) {
            set_error("one or more verification checks failed");
            return TPNS_ERR_VERIFY;
        }
        return TPNS_OK;
    });
    // Filesystem failures surface as configuration-level errors for runs so
    // the exit-code contract stays within {0, 1, 2, 3}.
    if (st == TPNS_ERR_IO || st == TPNS_ERR_INVALID) return TPNS_ERR_CONFIG;
    return st;
}

} /* extern "C" */
