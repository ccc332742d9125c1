// Compactly supported smooth forcing: a bump profile in a ball times a
// trigonometric time profile, sampled onto the lattice, plus helpers for its
// temporal mode coefficients and spectral tail diagnostics.
#pragma once

#include <vector>

#include "field.hpp"
#include "grid.hpp"
#include "oseen.hpp"

namespace tpns {

/// Description of the driving force.
struct ForcingSpec {
    Vec3 center{0.0, 0.0, 0.0};
    double radius = 2.0;
    Vec3 amplitude{0.0, 0.0, 0.0}; ///< vector amplitude (direction * size)
    enum class Profile { constant, cosine, mixed } profile = Profile::mixed;
    int k0 = 1;                          ///< mode number for Profile::cosine
    std::vector<double> weights{1.0, 1.0}; ///< mixed: sum_j w_j cos(kappa_j t)

    void validate() const;
};

/// Smooth bump: exp(1 - 1/(1 - u2)) for u2 = |x-c|^2/rho^2 < 1, else 0.
/// Equals 1 at the center.
double bump_value(double u2);

/// Time profile value at t.
double profile_value(const ForcingSpec& fs, double t, double period);

/// Complex coefficient of e^{i kappa_k t} in the profile (Hermitian in k).
double profile_mode_coeff(const ForcingSpec& fs, int k);

/// Sample the forcing onto the lattice (physical, 3 components). Requires
/// the support ball to fit inside |x| <= L/2 (hard error otherwise).
Field sample_forcing(const Grid& g, const ForcingSpec& fs);

/// Fraction of spectral mass outside the 2/3 band (reported, not enforced):
/// sqrt(sum_outside |f_hat|^2 / sum_all |f_hat|^2).
double spectral_tail_fraction(const Grid& g, const Field& spec);

} // namespace tpns
