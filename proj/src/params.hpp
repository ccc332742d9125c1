// Problem and discretization parameters shared by every module: drift speed,
// period, box half-length, spatial/temporal resolutions and tolerances.
#pragma once

#include <cmath>

#include "errors.hpp"

namespace tpns {

/// Immutable parameter set for one lattice/problem instance.
/// n_temporal is the temporal mode half-count: temporal frequencies
/// k in {-n_temporal, ..., n_temporal}, sampled at 2*n_temporal+1 times.
struct Params {
    double lambda = 1.0;           ///< drift speed along x1; must be nonzero
    double period = 2.0 * M_PI;    ///< time period T
    double box_half_length = 16.0; ///< box is [-L, L)^3
    int n_spatial = 64;            ///< samples per spatial axis (even, >= 4)
    int n_temporal = 8;            ///< temporal mode half-count (>= 1)
    bool dealias = true;           ///< 2/3-rule masking of products
    double tol_div = 1e-10;        ///< relative divergence tolerance
    double tol_solver = 1e-8;      ///< relative residual tolerance
    int max_iter = 30;             ///< Picard iteration cap

    /// Throws ConfigError when a field is out of contract.
    void validate() const {
        if (lambda == 0.0)
            throw ConfigError("params.lambda: drift required (lambda must be nonzero)");
        if (!(period > 0.0))
            throw ConfigError("params.period must be positive");
        if (!(box_half_length > 0.0))
            throw ConfigError("params.box_half_length must be positive");
        if (n_spatial < 4 || n_spatial % 2 != 0)
            throw ConfigError("params.n_spatial must be even and at least 4");
        if (n_temporal < 1)
            throw ConfigError("params.n_temporal must be at least 1");
        if (!(tol_div > 0.0) || !(tol_solver > 0.0))
            throw ConfigError("params tolerances must be positive");
        if (max_iter < 1)
            throw ConfigError("params.max_iter must be at least 1");
    }

    /// Number of time samples per period (odd).
    int time_samples() const { return 2 * n_temporal + 1; }
};

} // namespace tpns
