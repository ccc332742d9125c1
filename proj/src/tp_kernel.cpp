// Periodic kernel aggregate implementation.
#include "tp_kernel.hpp"

#include <cmath>

#include "errors.hpp"

namespace tpns {

Mat3 tp_kernel_timeslice(ModeCache& cache, const Vec3& x, double t, int k_max,
                         double lambda, double period) {
    if (k_max < 1) throw ConfigError("tp_kernel_timeslice: k_max must be >= 1");
    Mat3 out{};
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) out[j][l] = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        CMat3 g = mode_velocity_kernel(cache, k, x, lambda, period);
        double kap = 2.0 * M_PI * k / period;
        cd ph = std::exp(cd(0.0, kap * t));
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l)
                out[j][l] += 2.0 * (ph * g[j][l]).real();
    }
    return out;
}

double tp_kernel_l2t(ModeCache& cache, const Vec3& x, int k_max, int deriv,
                     double lambda, double period) {
    if (k_max < 1) throw ConfigError("tp_kernel_l2t: k_max must be >= 1");
    if (deriv != 0 && deriv != 1)
        throw ConfigError("tp_kernel_l2t: deriv must be 0 or 1");
    double acc = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        double f = (deriv == 0)
                       ? mode_kernel_norm(cache, k, x, lambda, period)
                       : mode_kernel_grad_norm(cache, k, x, lambda, period);
        acc += 2.0 * f * f; // Hermitian pair k and -k contribute equally
    }
    return std::sqrt(acc);
}

double tp_kernel_l2t_quadrature(ModeCache& cache, const Vec3& x, int k_max,
                                double lambda, double period) {
    // |slice(t)|_F^2 has temporal band 2*k_max; 4*k_max+1 uniform samples
    // integrate it exactly.
    int ns = 4 * k_max + 1;
    double acc = 0.0;
    for (int s = 0; s < ns; ++s) {
        double t = period * s / ns;
        Mat3 sl = tp_kernel_timeslice(cache, x, t, k_max, lambda, period);
        double f2 = 0.0;
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) f2 += sl[j][l] * sl[j][l];
        acc += f2;
    }
    return std::sqrt(acc / ns);
}

double tp_kernel_imag_defect(ModeCache& cache, const Vec3& x, int k_max,
                             double lambda, double period) {
    // Rebuild the slice keeping the imaginary part of the pairing explicitly.
    double worst = 0.0;
    for (int s = 0; s < 7; ++s) {
        double t = period * s / 7.0;
        cd accjl[3][3] = {};
        for (int k = 1; k <= k_max; ++k) {
            CMat3 gp = mode_velocity_kernel(cache, k, x, lambda, period);
            CMat3 gm = mode_velocity_kernel(cache, -k, x, lambda, period);
            double kap = 2.0 * M_PI * k / period;
            cd php = std::exp(cd(0.0, kap * t));
            cd phm = std::exp(cd(0.0, -kap * t));
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l)
                    accjl[j][l] += php * gp[j][l] + phm * gm[j][l];
        }
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l)
                worst = std::max(worst, std::abs(accjl[j][l].imag()));
    }
    return worst;
}

} // namespace tpns
