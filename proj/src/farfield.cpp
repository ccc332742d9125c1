// Far-field evaluator: support-ball quadrature against the steady and
// per-mode kernels, leading profile extraction and remainder assembly.
#include "farfield.hpp"

#include <cmath>

#include "errors.hpp"

namespace tpns {

FarField::FarField(const Params& par, const ForcingSpec& spec, int gl_order)
    : par_(par), spec_(spec), cache_(par.lambda, par.period) {
    par_.validate();
    spec_.validate();

    // Support-ball rule with the bump density folded into the weights.
    const NodeSet raw = ball_nodes(spec_.center, spec_.radius, gl_order);
    double wsum = 0.0;
    for (size_t q = 0; q < raw.nodes.size(); ++q) {
        const Vec3& y = raw.nodes[q];
        double u2 = 0.0;
        for (int c = 0; c < 3; ++c) {
            const double d = y[c] - spec_.center[c];
            u2 += d * d;
        }
        const double psi = bump_value(u2 / (spec_.radius * spec_.radius));
        if (psi <= 1e-300) continue;
        rule_.nodes.push_back(y);
        rule_.weights.push_back(raw.weights[q] * psi);
        wsum += raw.weights[q] * psi;
    }
    if (rule_.nodes.empty())
        throw ConfigError("FarField: empty quadrature over forcing support");

    const double c0 = profile_mode_coeff(spec_, 0);
    for (int c = 0; c < 3; ++c) cf_[c] = c0 * spec_.amplitude[c] * wsum;

    switch (spec_.profile) {
    case ForcingSpec::Profile::constant: kmax_ = 0; break;
    case ForcingSpec::Profile::cosine: kmax_ = spec_.k0; break;
    case ForcingSpec::Profile::mixed:
        kmax_ = (int)spec_.weights.size() - 1;
        break;
    }
}

double FarField::min_radius() const {
    double cnorm = 0.0;
    for (int c = 0; c < 3; ++c) cnorm += spec_.center[c] * spec_.center[c];
    return 2.0 * spec_.radius + std::sqrt(cnorm);
}

Vec3 FarField::steady_part(const Vec3& x) const {
    const double c0 = profile_mode_coeff(spec_, 0);
    Vec3 acc{0.0, 0.0, 0.0};
    if (c0 == 0.0) return acc;
    for (size_t q = 0; q < rule_.nodes.size(); ++q) {
        const Vec3& y = rule_.nodes[q];
        const Vec3 d{x[0] - y[0], x[1] - y[1], x[2] - y[2]};
        const Mat3 G = oseen_gamma(d, par_.lambda);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                acc[i] += rule_.weights[q] * G[i][j] * spec_.amplitude[j];
    }
    for (int i = 0; i < 3; ++i) acc[i] *= c0;
    return acc;
}

CVec3 FarField::mode_part(int k, const Vec3& x) const {
    if (k < 1) throw ConfigError("FarField::mode_part: k must be >= 1");
    CVec3 acc{cd(0.0, 0.0), cd(0.0, 0.0), cd(0.0, 0.0)};
    const double ck = profile_mode_coeff(spec_, k);
    if (ck == 0.0) return acc;
    for (size_t q = 0; q < rule_.nodes.size(); ++q) {
        const Vec3& y = rule_.nodes[q];
        const Vec3 d{x[0] - y[0], x[1] - y[1], x[2] - y[2]};
        const CMat3 G =
            mode_velocity_kernel(cache_, k, d, par_.lambda, par_.period);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                acc[i] += rule_.weights[q] * G[i][j] * spec_.amplitude[j];
    }
    for (int i = 0; i < 3; ++i) acc[i] *= ck;
    return acc;
}

Vec3 FarField::linear_field(const Vec3& x, double t) const {
    Vec3 out = steady_part(x);
    for (int k = 1; k <= kmax_; ++k) {
        if (profile_mode_coeff(spec_, k) == 0.0) continue;
        const CVec3 ok = mode_part(k, x);
        const double kap = 2.0 * M_PI * k / par_.period;
        const cd phase(std::cos(kap * t), std::sin(kap * t));
        for (int c = 0; c < 3; ++c) out[c] += 2.0 * (phase * ok[c]).real();
    }
    return out;
}

Vec3 FarField::profile(const Vec3& x) const {
    const Mat3 G = oseen_gamma(x, par_.lambda);
    Vec3 out{0.0, 0.0, 0.0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += G[i][j] * cf_[j];
    return out;
}

Vec3 FarField::remainder(const Vec3& x, double t) const {
    const Vec3 lf = linear_field(x, t);
    const Vec3 pr = profile(x);
    return Vec3{lf[0] - pr[0], lf[1] - pr[1], lf[2] - pr[2]};
}

double FarField::l2t_norm(const Vec3& x) const {
    const Vec3 s = steady_part(x);
    double acc = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
    for (int k = 1; k <= kmax_; ++k) {
        if (profile_mode_coeff(spec_, k) == 0.0) continue;
        const CVec3 ok = mode_part(k, x);
        for (int c = 0; c < 3; ++c) acc += 2.0 * std::norm(ok[c]);
    }
    return std::sqrt(acc);
}

} // namespace tpns
