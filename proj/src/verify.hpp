// Claim verification suite: each operation checks one family of numerical
// properties (symbol positivity, kernel bounds and decay, integrability
// tails, the shell energy balance, steady-kernel wake structure, far-field
// expansion) and returns a structured pass/fail report.
#pragma once

#include <string>
#include <vector>

#include "field.hpp"
#include "forcing.hpp"
#include "grid.hpp"
#include "io.hpp"
#include "params.hpp"
#include "solver.hpp"

namespace tpns {

/// One scalar check inside a claim report.
struct CheckResult {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    std::string cmp; ///< "<=", ">=", "<", ">", "=="
    bool pass = false;
};

/// Aggregated result of one claim verification.
struct ClaimReport {
    std::string claim_id;
    bool pass = true;
    std::vector<CheckResult> checks;
    ojson details = ojson::object();
    double runtime_seconds = 0.0; ///< never serialized into the JSON artifact

    /// Record a check and fold it into the aggregate pass flag.
    void add(const std::string& name, double value, const std::string& cmp,
             double threshold);

    /// JSON artifact body (claim id, checks, details; no timing).
    ojson to_json() const;
};

/// A converged solve packaged with its grid and forcing samples, so claim
/// operations can share one solve with the runner.
struct SolveBundle {
    Grid grid;
    SolveResult sol;
    Field f_phys;
};

/// Solve at the given resolution for the given forcing (helper shared by the
/// runner and the energy-balance claim).
SolveBundle make_solve_bundle(const Params& par, const ForcingSpec& fs);

/// lemma_4_2: oscillatory/steady symbols never vanish on retained modes, the
/// base mode denominator is exact, projection is idempotent and the
/// oscillatory resolvent inverts its symbol.
ClaimReport verify_symbol_nonvanishing(const Params& par);

/// lemma_4_3: per-mode scalar kernel pointwise bound, fitted exponential
/// decay rate, derivative shape ratios, and dual-route kernel agreement.
ClaimReport verify_mode_kernel_bounds(const Params& par);

/// lemma_4_4: time-L2 kernel decay exponents and compensated ratios.
ClaimReport verify_tp_kernel_decay(const Params& par);

/// lemma_4_5: L^q lattice masses of the time-periodic kernel part and its
/// gradient; tail fractions of balls.
ClaimReport verify_integrability(const Params& par);

/// lemma_5_2: shell energy balance on two shell pairs, improving under grid
/// refinement; tail Dirichlet monotonicity. Reuses `shared_fine` when given.
ClaimReport verify_energy_flux(const Params& par, const ForcingSpec& fs,
                               const SolveBundle* shared_fine = nullptr);

/// lemma_5_4: steady-kernel compensated bounds, wake-weighted sphere
/// integrals, downstream decay exponent and wake-angle scan.
ClaimReport verify_steady_kernel(const Params& par);

/// theorem_2_2: far-field remainder decay beyond the leading profile,
/// profile dominance, zero-mean scenario and quadrature stability.
ClaimReport verify_farfield_expansion(const Params& par,
                                      const ForcingSpec& fs);

/// L^q lattice mass of the time-periodic kernel part (gradient when
/// `gradient` is true) over the centered ball of radius `rmax`, cell-centered
/// Riemann sum with spacing h, modes 1..k_count. Enforces the admissible
/// exponent ranges (throws ConfigError outside them).
double integrability_mass(double q, bool gradient, double rmax, double h,
                          int k_count, double lambda, double period);

} // namespace tpns
