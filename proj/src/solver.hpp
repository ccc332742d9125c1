// Small-amplitude Picard solver: iterate the mild-solution fixed point
// u = (steady + oscillatory resolvents)(P_H(f - u.grad u)) on dealiased
// spectral fields, with a term-by-term PDE residual (pressure included) and
// post-hoc diagnostics.
#pragma once

#include <vector>

#include "fft.hpp"
#include "field.hpp"
#include "grid.hpp"
#include "multipliers.hpp"

namespace tpns {

/// Outcome of a Picard solve.
struct SolveResult {
    Field u_hat;      ///< velocity coefficients (masked, mean-free)
    Field p_hat;      ///< pressure coefficients
    Field first_iterate; ///< linear (first Picard) iterate
    std::vector<double> residual_history; ///< max |R| per iteration
    bool converged = false;
    int iterations = 0;
    double final_residual = 0.0; ///< absolute, compare against f_max * tol
    double f_max = 0.0;          ///< max |f_hat| over modes
    double divergence_rel = 0.0;
    double amplitude = 0.0;      ///< max pointwise |u| (physical)
    double forcing_tail = 0.0;   ///< out-of-band mass fraction of f (reported)
};

class Solver {
public:
    explicit Solver(const Grid& g) : g_(g), fft_(g), mult_(g) {}

    /// Divergence-form nonlinearity sum_j i xi_j (u_j u_i)^ from coefficients
    /// (input is dealiased internally; output is masked).
    Field nonlinear_divergence(const Field& u_hat) const;

    /// Convective-form nonlinearity (u . grad u)^ (same masking contract).
    Field nonlinear_convective(const Field& u_hat) const;

    /// Picard iteration from u = 0 on the (masked) forcing coefficients.
    /// Physical forcing input; throws NumericError on NaN/Inf.
    SolveResult solve(const Field& f_phys) const;

    /// Term-by-term spectral PDE residual max over retained modes, excluding
    /// the unconstrained (k, xi) = (0,0) mode:
    /// (i kappa + |xi|^2 - i lambda xi_1) u + N + i xi p - f.
    double residual_max(const Field& u_hat, const Field& p_hat,
                        const Field& n_hat, const Field& f_hat) const;

    /// Manufactured oscillatory roundtrip: given purely periodic coefficients
    /// W (no steady content), form F = (i kappa + |xi|^2 - i lambda xi_1) W
    /// and verify the oscillatory resolvent returns W. Returns the relative
    /// max error; throws ConfigError when W has steady content.
    double manufactured_roundtrip(const Field& w_hat) const;

    const Multipliers& multipliers() const { return mult_; }
    const Fft& fft() const { return fft_; }

private:
    Grid g_;
    Fft fft_;
    Multipliers mult_;
};

} // namespace tpns
