// Special-function implementations on top of GSL.
#include "special.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>
#include <gsl/gsl_sf_bessel.h>
#include <gsl/gsl_sf_expint.h>

#include <cmath>
#include <map>
#include <mutex>

#include "errors.hpp"

namespace tpns {

namespace {

constexpr double EULER_GAMMA = 0.57721566490153286060651209008240243;

struct GslQuiet {
    GslQuiet() { gsl_set_error_handler_off(); }
};
GslQuiet quiet_once; // errors surface through return codes, not aborts

// Integrand (1 - e^{-t})/t, removable singularity at 0.
double em1_over_t(double t, void*) {
    if (std::abs(t) < 1e-4) {
        // 1 - t/2 + t^2/6 - t^3/24
        return 1.0 + t * (-0.5 + t * (1.0 / 6.0 - t / 24.0));
    }
    return (1.0 - std::exp(-t)) / t;
}

} // namespace

cd sqrt_nnr(cd z) {
    cd r = std::sqrt(z); // principal branch: Re >= 0
    if (r.real() < 0.0) r = -r;
    return r;
}

double oseen_E(double s) {
    if (s == 0.0) return 0.0;
    if (std::abs(s) <= 1.0) {
        // sum_{n>=1} (-1)^{n+1} s^n/(n n!), term recurrence in n
        double term = s; // n = 1 term
        double sum = s;
        for (int n = 2; n <= 30; ++n) {
            term *= -s / n;             // now (-1)^{n+1} s^n / n!
            sum += term / n;            // divide by the leading n
        }
        return sum;
    }
    if (s > 1.0) {
        gsl_sf_result e1;
        int status = gsl_sf_expint_E1_e(s, &e1);
        double tail;
        if (status == GSL_SUCCESS)
            tail = e1.val;
        else if (status == GSL_EUNDRFLW)
            tail = 0.0;
        else
            throw NumericError("oseen_E: exponential integral failed");
        return EULER_GAMMA + std::log(s) + tail;
    }
    // s < -1: adaptive quadrature of the defining integral from 0 to s.
    gsl_integration_workspace* ws = gsl_integration_workspace_alloc(512);
    if (!ws) throw NumericError("oseen_E: workspace allocation failed");
    gsl_function f;
    f.function = &em1_over_t;
    f.params = nullptr;
    double value = 0.0, abserr = 0.0;
    int status = gsl_integration_qag(&f, 0.0, s, 1e-14, 1e-12, 512,
                                     GSL_INTEG_GAUSS61, ws, &value, &abserr);
    gsl_integration_workspace_free(ws);
    if (status != GSL_SUCCESS && status != GSL_EROUND)
        throw NumericError("oseen_E: quadrature failed for large negative s");
    return value;
}

EDerivs oseen_E_derivs(double s) {
    EDerivs d{};
    d.E = oseen_E(s);
    if (std::abs(s) < 0.5) {
        // E'(s)   = sum_{n>=1} (-1)^{n+1} s^{n-1}/n!
        // E''(s)  = sum_{n>=2} (-1)^{n+1} (n-1) s^{n-2}/n!
        // E'''(s) = sum_{n>=3} (-1)^{n+1} (n-1)(n-2) s^{n-3}/n!
        double invfact = 1.0; // 1/n! running
        double e1 = 0.0, e2 = 0.0, e3 = 0.0;
        double p1 = 1.0; // s^{n-1}
        for (int n = 1; n <= 24; ++n) {
            invfact /= n;
            double sign = (n % 2 == 1) ? 1.0 : -1.0;
            e1 += sign * p1 * invfact;
            if (n >= 2) {
                double p2 = (n == 2) ? 1.0 : std::pow(s, n - 2);
                e2 += sign * (n - 1) * p2 * invfact;
            }
            if (n >= 3) {
                double p3 = (n == 3) ? 1.0 : std::pow(s, n - 3);
                e3 += sign * (n - 1) * (n - 2) * p3 * invfact;
            }
            p1 *= s;
        }
        d.E1 = e1;
        d.E2 = e2;
        d.E3 = e3;
        return d;
    }
    double es = std::exp(-s);
    d.E1 = (1.0 - es) / s;
    d.E2 = (es * (1.0 + s) - 1.0) / (s * s);
    d.E3 = (2.0 - es * (s * s + 2.0 * s + 2.0)) / (s * s * s);
    return d;
}

void legendre_all(double t, int nmax, int orders,
                  std::vector<std::vector<double>>& out) {
    if (nmax < 0 || orders < 0 || orders > 3)
        throw ConfigError("legendre_all: bad nmax/orders");
    out.assign(orders + 1, std::vector<double>(nmax + 1, 0.0));
    out[0][0] = 1.0;
    if (nmax >= 1) out[0][1] = t;
    if (orders >= 1 && nmax >= 1) out[1][1] = 1.0;
    // (n+1) P_{n+1}^{(d)} = (2n+1)(d P_n^{(d-1)} + t P_n^{(d)}) - n P_{n-1}^{(d)}
    for (int n = 1; n < nmax; ++n) {
        for (int dorder = 0; dorder <= orders; ++dorder) {
            double lower = (dorder >= 1) ? out[dorder - 1][n] : 0.0;
            out[dorder][n + 1] = ((2.0 * n + 1.0) *
                                      (dorder * lower + t * out[dorder][n]) -
                                  n * out[dorder][n - 1]) /
                                 (n + 1.0);
        }
    }
}

namespace {
std::mutex gl_mutex;
std::map<int, gsl_integration_glfixed_table*>& gl_cache() {
    static std::map<int, gsl_integration_glfixed_table*> c;
    return c;
}
} // namespace

void gl_nodes(int order, double a, double b, std::vector<double>& nodes,
              std::vector<double>& weights) {
    if (order < 1) throw ConfigError("gl_nodes: order must be >= 1");
    gsl_integration_glfixed_table* tab = nullptr;
    {
        std::lock_guard<std::mutex> lk(gl_mutex);
        auto& c = gl_cache();
        auto it = c.find(order);
        if (it == c.end()) {
            tab = gsl_integration_glfixed_table_alloc((size_t)order);
            if (!tab) throw NumericError("gl_nodes: table allocation failed");
            c[order] = tab;
        } else {
            tab = it->second;
        }
    }
    nodes.resize(order);
    weights.resize(order);
    for (int i = 0; i < order; ++i) {
        double xi, wi;
        gsl_integration_glfixed_point(a, b, (size_t)i, &xi, &wi, tab);
        nodes[i] = xi;
        weights[i] = wi;
    }
}

void bessel_i_scaled(double x, int nmax, std::vector<double>& out) {
    if (nmax < 0) throw ConfigError("bessel_i_scaled: bad nmax");
    if (!(x >= 0.0)) throw ConfigError("bessel_i_scaled: x must be >= 0");
    out.assign(nmax + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0; // e^{-0} i_0(0) = 1, higher orders vanish
        return;
    }
    int status = gsl_sf_bessel_il_scaled_array(nmax, x, out.data());
    if (status == GSL_EUNDRFLW) {
        // GSL zeroes the whole array when any high order underflows. For the
        // small arguments where that happens, the ascending series
        // i_l(x) = x^l/(2l+1)!! sum_m (x^2/2)^m / (m! (2l+3)...(2l+2m+1))
        // is essentially exact; orders whose x^l underflows stay zero.
        const double y = 0.5 * x * x;
        const double ex = std::exp(-x);
        double pref = 1.0; // x^l / (2l+1)!!
        for (int l = 0; l <= nmax; ++l) {
            const double c1 = y / (2.0 * l + 3.0);
            const double c2 = c1 * y / (2.0 * (2.0 * l + 5.0));
            const double c3 = c2 * y / (3.0 * (2.0 * l + 7.0));
            out[l] = ex * pref * (1.0 + c1 + c2 + c3);
            pref *= x / (2.0 * l + 3.0);
        }
        return;
    }
    if (status != GSL_SUCCESS)
        throw NumericError("bessel_i_scaled: GSL evaluation failed");
}

} // namespace tpns
