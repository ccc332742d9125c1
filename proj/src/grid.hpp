// Lattice geometry and index bookkeeping: physical sample points, integer
// frequency maps, continuous frequencies, parity phases and dealias bands.
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "params.hpp"

namespace tpns {

/// Derived lattice quantities for a Params instance. The spatial grid is
/// x_m = -L + h*m, m = 0..n-1, h = 2L/n, on [-L, L)^3; time samples are
/// t_s = s*T/nt, s = 0..nt-1 with nt = 2*n_temporal+1 (odd).
/// Spectral storage uses DFT index order; m_of/k_of map storage index to
/// signed integer frequency.
struct Grid {
    Params par;
    int n = 0;        ///< spatial samples per axis
    int nt = 0;       ///< time samples (odd)
    double h = 0.0;   ///< spatial step
    double dt = 0.0;  ///< temporal step
    double dxi = 0.0; ///< spatial frequency spacing pi/L
    double dkap = 0.0;///< temporal frequency spacing 2 pi/T
    int band_m = 0;   ///< spatial dealias band: keep |m| <= band_m
    int band_k = 0;   ///< temporal dealias band: keep |k| <= band_k

    std::vector<int> m_map;      ///< storage index -> signed spatial integer
    std::vector<int> k_map;      ///< storage index -> signed temporal integer
    std::vector<double> xi_map;  ///< storage index -> xi component (pi/L * m)
    std::vector<double> kap_map; ///< storage index -> kappa (2 pi/T * k)
    std::vector<double> x_map;   ///< storage index -> physical coordinate
    std::vector<double> phase_map; ///< storage index -> (-1)^{|m|}

    Grid() = default;

    explicit Grid(const Params& p) : par(p) {
        par.validate();
        n = par.n_spatial;
        nt = par.time_samples();
        h = 2.0 * par.box_half_length / n;
        dt = par.period / nt;
        dxi = M_PI / par.box_half_length;
        dkap = 2.0 * M_PI / par.period;
        band_m = n / 3;
        band_k = nt / 3;

        m_map.resize(n);
        xi_map.resize(n);
        x_map.resize(n);
        phase_map.resize(n);
        for (int i = 0; i < n; ++i) {
            int m = (i <= n / 2 - 1) ? i : i - n;
            if (i == n / 2) m = -n / 2; // even n: Nyquist stored as -n/2
            m_map[i] = m;
            xi_map[i] = dxi * m;
            x_map[i] = -par.box_half_length + h * i;
            phase_map[i] = (std::abs(m) % 2 == 0) ? 1.0 : -1.0;
        }
        k_map.resize(nt);
        kap_map.resize(nt);
        for (int s = 0; s < nt; ++s) {
            int k = (s <= par.n_temporal) ? s : s - nt;
            k_map[s] = k;
            kap_map[s] = dkap * k;
        }
    }

    /// Flat index into a field with C interleaved components,
    /// layout (s slow, i1, i2, i3, c fast).
    size_t idx(int s, int i1, int i2, int i3, int c, int C) const {
        return ((((size_t)s * n + i1) * n + i2) * n + i3) * (size_t)C + c;
    }

    /// Number of space-time lattice points.
    size_t points() const { return (size_t)nt * n * n * n; }

    /// True when the mode at storage indices (s, i1, i2, i3) survives the
    /// 2/3-rule band in all four dimensions.
    bool in_band(int s, int i1, int i2, int i3) const {
        return std::abs(k_map[s]) <= band_k && std::abs(m_map[i1]) <= band_m &&
               std::abs(m_map[i2]) <= band_m && std::abs(m_map[i3]) <= band_m;
    }
};

} // namespace tpns
