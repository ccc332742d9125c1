// Energy-flux balance over spherical shells: the time-averaged shell Dirichlet
// integral against boundary transport fluxes, interior forcing work and the
// mean-force correction, evaluated from a converged periodic solution.
#pragma once

#include <utility>
#include <vector>

#include "fft.hpp"
#include "field.hpp"
#include "grid.hpp"

namespace tpns {

/// One shell pair (R_in < R_out): both sides of the balance and the relative
/// mismatch |lhs - rhs| / max(|lhs|, |rhs|).
struct FluxPair {
    double r_in = 0.0;
    double r_out = 0.0;
    double lhs = 0.0; ///< time-mean Dirichlet integral over the shell
    double rhs = 0.0; ///< boundary fluxes + forcing work - mean-force term
    double rel_err = 0.0;
};

/// Full balance report plus a tail-monotonicity surrogate: the Dirichlet
/// integral over (R, R_tail) is nonincreasing in R.
struct FluxReport {
    std::vector<FluxPair> pairs;
    std::vector<double> tail_radii;
    std::vector<double> tail_dirichlet;
    bool tail_monotone = false;
};

/// Evaluate the balance for each requested (R_in, R_out) pair. Fields are the
/// converged spectral velocity/pressure and the physical forcing samples; the
/// work term uses the band-limited forcing reconstruction (the forcing the
/// solution balances) and all time averages are grid-sample means (exact for
/// the retained bands).
FluxReport flux_check(const Grid& g, const Fft& fft, const Field& u_hat,
                      const Field& p_hat, const Field& f_phys,
                      const std::vector<std::pair<double, double>>& pairs,
                      double tail_outer = 8.0);

} // namespace tpns
