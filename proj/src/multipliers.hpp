// Fourier-multiplier solution operators on spectral fields: Helmholtz-Leray
// projection, the steady drift resolvent, the oscillatory (k != 0) resolvent,
// the pressure multiplier and the 2/3-rule dealias mask. Symbol grids are
// precomputed once per lattice and shared read-only.
#pragma once

#include "field.hpp"
#include "grid.hpp"

namespace tpns {

class Multipliers {
public:
    explicit Multipliers(const Grid& g);

    /// Pointwise Helmholtz-Leray projection v -> v - xi (xi.v)/|xi|^2,
    /// leaving every xi = 0 mode untouched. In place; 3 components.
    void helmholtz(Field& v) const;

    /// Steady resolvent: on the k = 0 plane, Helmholtz-project then divide
    /// by |xi|^2 - i lambda xi_1; the xi = 0 mode is zeroed (mean-free
    /// convention) and all k != 0 modes of the result are zero.
    Field steady_inverse(const Field& g) const;

    /// Oscillatory resolvent: pure division by |xi|^2 + i(kappa_k - lambda
    /// xi_1) on every k != 0 mode; the whole k = 0 plane of the result is
    /// zero. No projection is applied.
    Field oscillatory_inverse(const Field& g) const;

    /// Pressure multiplier: p_hat = -i xi.g_hat/|xi|^2, zero at xi = 0.
    Field pressure(const Field& g) const;

    /// Zero every mode outside the 2/3 band (all four dimensions). In place.
    void dealias(Field& f) const;

    /// Oscillatory denominator at a storage multi-index.
    cd osc_denom(int s, int i1, int i2, int i3) const;

    /// Smallest |denominator| over all k != 0 modes, with the minimizing
    /// mode's |k| and |xi| reported.
    double min_osc_denom(int& k_at, double& xi_norm_at) const;

    const Grid& grid() const { return g_; }

private:
    Grid g_;
    std::vector<double> xi2_; ///< |xi|^2 over the spatial lattice, cached
};

} // namespace tpns
