// Far-field representation of the linear response to a compact forcing: the
// steady-kernel convolution plus time-periodic mode convolutions, the leading
// one-point profile with its net-force coefficient, and the remainder between
// them.
#pragma once

#include <array>
#include <complex>
#include <vector>

#include "forcing.hpp"
#include "mode_table.hpp"
#include "oseen.hpp"
#include "params.hpp"
#include "quadrature.hpp"

namespace tpns {

using CVec3 = std::array<cd, 3>;

/// Linear far-field evaluator for one forcing specification. Convolutions use
/// a fixed-order tensor Gauss-Legendre rule over the support ball.
class FarField {
public:
    FarField(const Params& par, const ForcingSpec& spec, int gl_order = 14);

    /// Steady (time-mean) part S(x) of the linear response.
    Vec3 steady_part(const Vec3& x) const;

    /// Complex coefficient O_k(x) of mode k >= 1.
    CVec3 mode_part(int k, const Vec3& x) const;

    /// Full linear response S(x) + 2 Re sum_k e^{i kappa_k t} O_k(x).
    Vec3 linear_field(const Vec3& x, double t) const;

    /// Leading profile: the steady kernel at x applied to the net force.
    Vec3 profile(const Vec3& x) const;

    /// linear_field - profile at (x, t).
    Vec3 remainder(const Vec3& x, double t) const;

    /// Net force vector carried by the profile (time-mean forcing integral).
    Vec3 net_force() const { return cf_; }

    /// Time-L2 norm of the linear response at x:
    /// sqrt(|S|^2 + 2 sum_k |O_k|^2).
    double l2t_norm(const Vec3& x) const;

    /// Highest temporal mode present in the forcing profile.
    int k_max() const { return kmax_; }

    /// Smallest |x| at which the far-field split is meaningful here.
    double min_radius() const;

private:
    Params par_;
    ForcingSpec spec_;
    NodeSet rule_; ///< support-ball nodes; weights carry the bump density
    Vec3 cf_{0.0, 0.0, 0.0};
    int kmax_ = 0;
    mutable ModeCache cache_;
};

} // namespace tpns
