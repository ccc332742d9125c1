// Field-level numerics: discrete L^p norms over regions, divergence and
// Hermitian-symmetry diagnostics, finiteness guards. All reductions run in
// fixed lattice order so results are independent of thread count.
#pragma once

#include <string>

#include "field.hpp"
#include "grid.hpp"

namespace tpns {

/// Integration region for norms: a ball or a spherical shell centered at the
/// origin, or the whole box.
struct Region {
    enum class Kind { full, ball, shell } kind = Kind::full;
    double r_inner = 0.0;
    double r_outer = 0.0;

    static Region full() { return {Kind::full, 0.0, 0.0}; }
    static Region ball(double r) { return {Kind::ball, 0.0, r}; }
    static Region shell(double r1, double r2) { return {Kind::shell, r1, r2}; }

    bool contains(double r) const {
        switch (kind) {
            case Kind::full: return true;
            case Kind::ball: return r < r_outer;
            case Kind::shell: return r >= r_inner && r < r_outer;
        }
        return false;
    }
};

/// Discrete L^p norm with the (1/T) dt dx normalization:
/// ((1/nt) sum_s sum_x |f(t_s, x)|^p h^3)^{1/p}, pointwise Euclidean
/// magnitude across components, lattice points restricted to the region.
/// exclude_radius > 0 drops lattice points with |x| < exclude_radius
/// (used to excise a singular origin cell). Requires p >= 1.
double lp_norm(const Grid& g, const Field& f, double p, const Region& region,
               double exclude_radius = 0.0);

/// Largest |xi . u_hat| over all modes, divided by the largest coefficient
/// magnitude (0 when the field vanishes). Requires a 3-component spectral
/// field.
double divergence_max_rel(const Grid& g, const Field& u);

/// Largest |c(-k,-xi) - conj(c(k,xi))| over all modes of a spectral field.
double hermitian_defect(const Grid& g, const Field& f);

/// Largest coefficient/sample magnitude.
double max_abs(const Field& f);

/// Largest imaginary part in magnitude (physical fields should be real).
double max_imag(const Field& f);

/// Throws NumericError when any entry is NaN or Inf; `who` names the caller.
void guard_finite(const Field& f, const char* who);

} // namespace tpns
